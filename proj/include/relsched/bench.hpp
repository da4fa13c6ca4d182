#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "relsched/factorization.hpp"
#include "relsched/graph.hpp"
#include "relsched/schedule.hpp"
#include "relsched/validity.hpp"

namespace relsched {

/// One cell of the generator-vs-n experiment table. Every field is
/// reproducible given the same inputs and seed; wall-clock timings are
/// deliberately kept out so identical invocations emit identical bytes.
struct BenchRow {
  std::string generator;
  int n = 0;
  long long length = 0;
  std::string verified;  ///< "true", "false", "refused", or "skipped"
  long long certified_lower_bound = 0;  ///< 0 when n < 4 (family undefined)
};

struct BenchOptions {
  bool verify = false;
  std::uint64_t seed = 0;  ///< used by randomized-yen
  SearchLimits limits;
};

inline Schedule make_schedule(const std::string& generator, const Digraph& g,
                              std::uint64_t seed = 0) {
  if (generator == "round-robin") return round_robin(g);
  if (generator == "yen") return yen(g, VertexOrder::identity(g.n()));
  if (generator == "randomized-yen") return randomized_yen(g, seed);
  throw std::invalid_argument("unknown generator: " + generator);
}

inline std::vector<BenchRow> run_bench(const std::vector<int>& ns,
                                       const std::vector<std::string>& generators,
                                       const BenchOptions& options = {}) {
  std::vector<BenchRow> rows;
  for (const int n : ns) {
    const Digraph g = complete_digraph(n);
    for (const std::string& generator : generators) {
      const Schedule s = make_schedule(generator, g, options.seed);
      BenchRow row;
      row.generator = generator;
      row.n = n;
      row.length = static_cast<long long>(s.length());
      if (options.verify) {
        const ValidityReport report = is_valid(s, g, options.limits);
        row.verified = report.refused() ? "refused" : (report.valid() ? "true" : "false");
      } else {
        row.verified = "skipped";
      }
      if (n >= 4) row.certified_lower_bound = audit_lower_bound(s, g).certified_lower_bound;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string csv = "generator,n,length,length_over_n3,verified,certified_lower_bound\n";
  for (const BenchRow& row : rows) {
    char ratio[32];
    const double n3 = static_cast<double>(row.n) * row.n * row.n;
    std::snprintf(ratio, sizeof(ratio), "%.6f", static_cast<double>(row.length) / n3);
    csv += row.generator + "," + std::to_string(row.n) + "," + std::to_string(row.length) + "," +
           ratio + "," + row.verified + "," + std::to_string(row.certified_lower_bound) + "\n";
  }
  return csv;
}

}  // namespace relsched
