// relsched: generate, execute, validate, and audit non-adaptive
// edge-relaxation schedules on complete digraphs.
//
// Subcommands: generate, run, validate, audit-lowerbound, reduce, bench.
// Machine-readable output (JSON or CSV) goes to stdout; notes go to
// stderr. Exit codes: 0 success/valid, 1 invalid/negative-cycle, 2
// refused (budget or alphabet cap).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "relsched/relsched.hpp"

namespace {

using nlohmann::json;
using namespace relsched;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitRefused = 2;

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RELSCHED_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "relsched: ignoring malformed RELSCHED_BUDGET\n";
    }
  }
  return SearchLimits{}.max_steps;
}

void write_text(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << contents;
}

json dist_to_json(const Dist& d) {
  if (!d) return nullptr;
  if (d->is_integer()) return d->num();
  return d->to_string();
}

json report_to_json(const ValidityReport& r) {
  json doc{{"valid", r.valid()},
           {"paths_checked", r.paths_checked},
           {"budget_exhausted", r.refused()}};
  if (r.witness) doc["witness"] = r.witness->vertices;
  return doc;
}

struct GenerateArgs {
  std::string generator;
  int n = 0;
  int rounds = 0;      // 0: default n-1
  int half_passes = 0; // 0: default n
  std::uint64_t seed = 0;
  std::string order_csv;
  std::string format = "text";
  std::string out;
};

int cmd_generate(const GenerateArgs& args) {
  const Digraph g = complete_digraph(args.n);
  Schedule s;
  ScheduleHeader header;
  header.generator = args.generator;
  if (args.generator == "round-robin") {
    const int rounds = args.rounds > 0 ? args.rounds : std::max(1, args.n - 1);
    s = round_robin(g, rounds);
    header.parameters = {{"rounds", rounds}};
  } else if (args.generator == "yen") {
    VertexOrder order = VertexOrder::identity(args.n);
    if (!args.order_csv.empty()) {
      order.order.clear();
      std::istringstream in(args.order_csv);
      std::string token;
      while (std::getline(in, token, ',')) order.order.push_back(std::stoi(token));
    }
    const int half_passes = args.half_passes > 0 ? args.half_passes : args.n;
    s = yen(g, order, half_passes);
    header.parameters = {{"half_passes", half_passes}, {"order", order.order}};
  } else if (args.generator == "randomized-yen") {
    s = randomized_yen(g, args.seed);
    header.parameters = {{"half_passes", args.n}};
    header.seed = args.seed;
  } else {
    throw CLI::ValidationError("generator", "unknown generator: " + args.generator);
  }

  std::ostringstream buffer;
  if (args.format == "json")
    save_schedule_json(buffer, s, header);
  else
    save_schedule_text(buffer, s);
  write_text(args.out, buffer.str());
  std::cerr << "relsched: " << args.generator << " n=" << args.n << " length=" << s.length()
            << "\n";
  return kExitValid;
}

int cmd_run(const std::string& graph_path, const std::string& weights_path,
            const std::string& schedule_path, const std::string& out) {
  const Digraph g = load_graph_file(graph_path);
  const WeightAssignment w = load_weights_file(weights_path, g);
  const Schedule s = load_schedule_file(schedule_path, g.n());
  const DistanceVector d = run_schedule(g, w, s);
  const bool residue = detect_negative_cycle_residue(g, w, d);

  json distances = json::array();
  for (int v = 0; v < g.n(); ++v) distances.push_back(dist_to_json(d.at(v)));
  const json doc{{"n", g.n()},
                 {"source", g.source()},
                 {"schedule_length", s.length()},
                 {"distances", distances},
                 {"negative_cycle_residue", residue}};
  write_text(out, doc.dump(2) + "\n");
  return residue ? kExitInvalid : kExitValid;
}

int cmd_validate(const std::string& graph_path, const std::string& schedule_path,
                 std::uint64_t budget, const std::string& out) {
  const Digraph g = load_graph_file(graph_path);
  const Schedule s = load_schedule_file(schedule_path, g.n());
  const ValidityReport r = is_valid(s, g, SearchLimits{budget});
  write_text(out, report_to_json(r).dump(2) + "\n");
  if (r.refused()) return kExitRefused;
  return r.valid() ? kExitValid : kExitInvalid;
}

int cmd_audit(const std::string& schedule_path, int n, int max_alphabet,
              const std::string& out) {
  const Digraph g = complete_digraph(n);
  const Schedule s = load_schedule_file(schedule_path, n);
  const LowerBoundAudit audit = audit_lower_bound(s, g, max_alphabet);
  char ratio[32];
  std::snprintf(ratio, sizeof(ratio), "%.6f",
                audit.certified_lower_bound > 0
                    ? static_cast<double>(audit.schedule_len) / audit.certified_lower_bound
                    : 0.0);
  const json doc{{"family_size", audit.family_size},
                 {"per_member_lengths", audit.per_member_lengths},
                 {"all_universal", audit.all_universal},
                 {"refused", audit.refused},
                 {"certified_lower_bound", audit.certified_lower_bound},
                 {"schedule_length", audit.schedule_len},
                 {"ratio", ratio}};
  write_text(out, doc.dump(2) + "\n");
  if (audit.refused) return kExitRefused;
  return audit.all_universal ? kExitValid : kExitInvalid;
}

int cmd_reduce(const std::string& input, const std::string& graph_out,
               const std::string& schedule_out, const std::string& manifest_out) {
  std::ifstream in(input);
  if (!in) throw std::runtime_error("cannot open APS instance: " + input);
  const json doc = json::parse(in);
  ApsInstance inst;
  inst.n = doc.at("n").get<int>();
  inst.symbols = doc.at("T").get<std::vector<int>>();
  const ReductionOutput out = aps_to_validity(inst);

  std::ostringstream graph_buf;
  save_graph(graph_buf, out.graph);
  write_text(graph_out, graph_buf.str());

  std::ostringstream sched_buf;
  save_schedule_text(sched_buf, out.schedule);
  write_text(schedule_out, sched_buf.str());

  json specials = json::array();
  for (const Edge& e : out.special_edges) specials.push_back({e.tail, e.head});
  const json manifest{{"n", inst.n},
                      {"T", inst.symbols},
                      {"num_vertices", out.graph.n()},
                      {"special_edges", specials},
                      {"block_starts", out.block_starts},
                      {"base_length", out.base_length},
                      {"stripped_length", out.stripped_length},
                      {"schedule_length", out.schedule.length()}};
  write_text(manifest_out, manifest.dump(2) + "\n");
  return kExitValid;
}

int cmd_bench(int n_min, int n_max, const std::string& generators_csv, bool verify,
              std::uint64_t budget, std::uint64_t seed, const std::string& out) {
  std::vector<int> ns;
  for (int n = n_min; n <= n_max; ++n) ns.push_back(n);
  std::vector<std::string> generators;
  std::istringstream in(generators_csv);
  std::string token;
  while (std::getline(in, token, ',')) generators.push_back(token);

  BenchOptions options;
  options.verify = verify;
  options.seed = seed;
  options.limits.max_steps = budget;
  const auto start = std::chrono::steady_clock::now();
  write_text(out, bench_csv(run_bench(ns, generators, options)));
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  // wall time goes to stderr only: the CSV must be byte-identical across runs
  std::cerr << "relsched: bench " << ns.size() * generators.size() << " cells in "
            << elapsed.count() << " ms\n";
  return kExitValid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-adaptive relaxation schedules: generators, execution, validity, audits"};
  app.require_subcommand(1);
  std::uint64_t budget = default_budget();
  app.add_option("--budget", budget,
                 "step budget for exhaustive searches (env RELSCHED_BUDGET)");
  bool machine = false;
  app.add_flag("--machine", machine, "suppress stderr notes; stdout is machine output only");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a schedule file");
  generate->add_option("generator", gen.generator, "round-robin | yen | randomized-yen")
      ->required();
  generate->add_option("--n", gen.n, "vertex count of the complete digraph")->required();
  generate->add_option("--rounds", gen.rounds, "round-robin rounds (default n-1)");
  generate->add_option("--half-passes", gen.half_passes, "yen half-passes (default n)");
  generate->add_option("--seed", gen.seed, "seed for randomized-yen");
  generate->add_option("--order", gen.order_csv, "comma-separated vertex order for yen");
  generate->add_option("--format", gen.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  generate->add_option("-o,--out", gen.out, "output file (default stdout)");

  std::string graph_path, weights_path, schedule_path, out_path, input_path;
  auto* run = app.add_subcommand("run", "execute a schedule and report distances");
  run->add_option("-g,--graph", graph_path)->required();
  run->add_option("-w,--weights", weights_path)->required();
  run->add_option("-s,--schedule", schedule_path)->required();
  run->add_option("-o,--out", out_path);

  auto* validate = app.add_subcommand("validate", "exhaustively decide schedule validity");
  validate->add_option("-g,--graph", graph_path)->required();
  validate->add_option("-s,--schedule", schedule_path)->required();
  validate->add_option("-o,--out", out_path);

  int audit_n = 0, max_alphabet = 8;
  auto* audit = app.add_subcommand("audit-lowerbound",
                                   "matching-family universality audit and certified bound");
  audit->add_option("-s,--schedule", schedule_path)->required();
  audit->add_option("--n", audit_n, "vertex count of the target complete digraph")->required();
  audit->add_option("--max-alphabet", max_alphabet, "refuse universality checks beyond this");
  audit->add_option("-o,--out", out_path);

  std::string reduce_graph_out = "reduction_graph.txt";
  std::string reduce_schedule_out = "reduction_schedule.txt";
  std::string reduce_manifest_out = "reduction_manifest.json";
  auto* reduce = app.add_subcommand("reduce", "build the APS -> validity reduction");
  reduce->add_option("-i,--input", input_path, "APS instance JSON {n, T}")->required();
  reduce->add_option("--graph-out", reduce_graph_out);
  reduce->add_option("--schedule-out", reduce_schedule_out);
  reduce->add_option("--manifest-out", reduce_manifest_out);

  int n_min = 4, n_max = 8;
  std::string generators_csv = "round-robin,yen";
  bool verify = false;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "generator length table as CSV");
  bench->add_option("--n-min", n_min);
  bench->add_option("--n-max", n_max);
  bench->add_option("--generators", generators_csv, "comma-separated generator names");
  bench->add_flag("--verify", verify, "run the exhaustive validity check per row");
  bench->add_option("--seed", bench_seed, "seed for randomized-yen rows");
  bench->add_option("-o,--out", out_path);

  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (machine) std::cerr.setstate(std::ios::failbit);

  try {
    if (*generate) return cmd_generate(gen);
    if (*run) return cmd_run(graph_path, weights_path, schedule_path, out_path);
    if (*validate) return cmd_validate(graph_path, schedule_path, budget, out_path);
    if (*audit) return cmd_audit(schedule_path, audit_n, max_alphabet, out_path);
    if (*reduce) return cmd_reduce(input_path, reduce_graph_out, reduce_schedule_out,
                                   reduce_manifest_out);
    if (*bench) return cmd_bench(n_min, n_max, generators_csv, verify, budget, bench_seed,
                                 out_path);
  } catch (const std::exception& err) {
    std::cerr.clear();
    std::cerr << "relsched: error: " << err.what() << "\n";
    return kExitRefused + 1;
  }
  return kExitValid;
}
