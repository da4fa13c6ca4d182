#pragma once

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "relsched/engine.hpp"
#include "relsched/graph.hpp"
#include "relsched/schedule.hpp"

namespace relsched {

// Text formats. Blank lines and lines starting with '#' are ignored.
//
//   graph:    first line `n <count> source <index>`, then one `u v` per
//             line; or the single line `complete <n>` (source 0)
//   schedule: one `u v` per line, in step order
//   weights:  one `u v w` per line, w an integer or decimal rational

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace detail

inline Digraph load_graph(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw std::runtime_error("graph file: empty");
  std::istringstream head(line);
  std::string keyword;
  head >> keyword;
  if (keyword == "complete") {
    int n = 0;
    if (!(head >> n)) throw std::runtime_error("graph file: malformed complete declaration");
    return complete_digraph(n);
  }
  if (keyword != "n") throw std::runtime_error("graph file: expected `n` or `complete`");
  int n = 0;
  std::string source_kw;
  int source = 0;
  if (!(head >> n >> source_kw >> source) || source_kw != "source")
    throw std::runtime_error("graph file: expected `n <count> source <index>`");
  std::vector<Edge> edges;
  while (detail::next_content_line(in, line)) {
    std::istringstream row(line);
    Edge e;
    if (!(row >> e.tail >> e.head)) throw std::runtime_error("graph file: malformed edge line");
    edges.push_back(e);
  }
  return Digraph(n, std::move(edges), source);
}

inline void save_graph(std::ostream& out, const Digraph& g) {
  if (g.is_complete() && g.source() == 0) {
    out << "complete " << g.n() << "\n";
    return;
  }
  out << "n " << g.n() << " source " << g.source() << "\n";
  for (const Edge& e : g.edges()) out << e.tail << " " << e.head << "\n";
}

inline Schedule load_schedule_text(std::istream& in, int graph_n) {
  Schedule s;
  s.graph_n = graph_n;
  std::string line;
  while (detail::next_content_line(in, line)) {
    std::istringstream row(line);
    Edge e;
    if (!(row >> e.tail >> e.head)) throw std::runtime_error("schedule file: malformed step line");
    s.steps.push_back(e);
  }
  return s;
}

inline void save_schedule_text(std::ostream& out, const Schedule& s) {
  for (const Edge& e : s.steps) out << e.tail << " " << e.head << "\n";
}

/// Provenance recorded in the JSON schedule header.
struct ScheduleHeader {
  std::string generator = "unknown";
  nlohmann::json parameters = nlohmann::json::object();
  std::optional<std::uint64_t> seed;
};

inline void save_schedule_json(std::ostream& out, const Schedule& s, const ScheduleHeader& h) {
  nlohmann::json header{{"n", s.graph_n}, {"generator", h.generator}, {"parameters", h.parameters}};
  header["seed"] = h.seed ? nlohmann::json(*h.seed) : nlohmann::json(nullptr);
  nlohmann::json steps = nlohmann::json::array();
  for (const Edge& e : s.steps) steps.push_back({e.tail, e.head});
  out << nlohmann::json{{"header", header}, {"steps", steps}}.dump(2) << "\n";
}

inline Schedule load_schedule_json(std::istream& in) {
  const nlohmann::json doc = nlohmann::json::parse(in);
  Schedule s;
  s.graph_n = doc.at("header").at("n").get<int>();
  for (const auto& pair : doc.at("steps"))
    s.steps.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
  return s;
}

/// Loads a schedule from either format, sniffing JSON by the leading '{'.
inline Schedule load_schedule(std::istream& in, int graph_n) {
  while (in.peek() != std::char_traits<char>::eof()) {
    const char c = static_cast<char>(in.peek());
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      in.get();
      continue;
    }
    if (c == '{') {
      Schedule s = load_schedule_json(in);
      if (s.graph_n != graph_n)
        throw std::runtime_error("schedule file: header n does not match the graph");
      return s;
    }
    break;
  }
  return load_schedule_text(in, graph_n);
}

inline WeightAssignment load_weights(std::istream& in, const Digraph& g) {
  WeightAssignment w(g.n());
  std::string line;
  while (detail::next_content_line(in, line)) {
    std::istringstream row(line);
    Edge e;
    std::string value;
    if (!(row >> e.tail >> e.head >> value))
      throw std::runtime_error("weight file: malformed `u v w` line");
    if (!g.has_edge(e)) throw std::runtime_error("weight file: weight on a non-edge");
    w.set(e, Rational::parse(value));
  }
  if (!w.total_on(g)) throw std::runtime_error("weight file: not every edge has a weight");
  return w;
}

// path-based conveniences

inline Digraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return load_graph(in);
}

inline Schedule load_schedule_file(const std::string& path, int graph_n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open schedule file: " + path);
  return load_schedule(in, graph_n);
}

inline WeightAssignment load_weights_file(const std::string& path, const Digraph& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight file: " + path);
  return load_weights(in, g);
}

}  // namespace relsched
