#pragma once

// Test-only oracles, deliberately independent of the implementation paths
// they check: a recursive path enumerator (vs KPathStream), a memoized
// subsequence matcher (vs greedy containment), and a min-over-simple-paths
// distance computation (vs the all-pairs oracle and schedule runs).

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "relsched/engine.hpp"
#include "relsched/graph.hpp"
#include "relsched/schedule.hpp"

namespace oracles {

using namespace relsched;

inline void collect_k_paths(const Digraph& g, VertexId u, int remaining,
                            std::vector<VertexId>& prefix, std::vector<bool>& visited,
                            std::vector<SimplePath>& out) {
  if (remaining == 0) {
    out.push_back(SimplePath{prefix});
    return;
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    if (visited[v] || !g.has_edge(u, v)) continue;
    visited[v] = true;
    prefix.push_back(v);
    collect_k_paths(g, v, remaining - 1, prefix, visited, out);
    prefix.pop_back();
    visited[v] = false;
  }
}

/// Every simple source path with exactly k edges, by plain recursion.
inline std::vector<SimplePath> brute_force_k_paths(const Digraph& g, int k) {
  std::vector<SimplePath> out;
  if (k < 0 || k > g.n() - 1) return out;
  std::vector<VertexId> prefix{g.source()};
  std::vector<bool> visited(g.n(), false);
  visited[g.source()] = true;
  collect_k_paths(g, g.source(), k, prefix, visited, out);
  return out;
}

inline std::vector<SimplePath> brute_force_all_paths(const Digraph& g) {
  std::vector<SimplePath> out;
  for (int k = 0; k <= g.n() - 1; ++k) {
    auto paths = brute_force_k_paths(g, k);
    out.insert(out.end(), paths.begin(), paths.end());
  }
  return out;
}

inline bool match_memo(const std::vector<Edge>& edges, std::size_t ei,
                       const std::vector<Edge>& steps, std::size_t si,
                       std::vector<std::vector<signed char>>& memo) {
  if (ei == edges.size()) return true;
  if (si == steps.size()) return false;
  signed char& m = memo[ei][si];
  if (m != -1) return m == 1;
  bool ok = match_memo(edges, ei, steps, si + 1, memo);
  if (!ok && steps[si] == edges[ei]) ok = match_memo(edges, ei + 1, steps, si + 1, memo);
  m = ok ? 1 : 0;
  return ok;
}

/// Subsequence containment by memoized recursion over (edge, step) pairs.
inline bool dp_contains_path(const Schedule& s, const SimplePath& p) {
  if (p.vertices.size() <= 1) return true;
  const std::vector<Edge> edges = path_edges(p);
  std::vector<std::vector<signed char>> memo(edges.size(),
                                             std::vector<signed char>(s.steps.size(), -1));
  return match_memo(edges, 0, s.steps, 0, memo);
}

/// Min total weight over all simple source paths. Exact on any instance
/// without negative cycles (where simple paths realize the distances).
inline DistanceVector brute_force_distances(const Digraph& g, const WeightAssignment& w) {
  DistanceVector dist;
  dist.d.assign(g.n(), std::nullopt);
  for (const SimplePath& p : brute_force_all_paths(g)) {
    Rational total(0);
    for (const Edge& e : p.vertices.size() > 1 ? path_edges(p) : std::vector<Edge>{})
      total += w.at(e);
    Dist& entry = dist.d[p.endpoint()];
    if (!entry || total < *entry) entry = total;
  }
  return dist;
}

/// Deterministic random schedule over g's edges.
inline Schedule random_schedule(const Digraph& g, std::size_t length, std::mt19937_64& rng) {
  Schedule s;
  s.graph_n = g.n();
  if (g.edge_count() == 0) return s;
  std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
  for (std::size_t i = 0; i < length; ++i) s.steps.push_back(g.edges()[pick(rng)]);
  return s;
}

inline WeightAssignment random_integer_weights(const Digraph& g, long long lo, long long hi,
                                               std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> pick(lo, hi);
  WeightAssignment w(g.n());
  for (const Edge& e : g.edges()) w.set(e, Rational(pick(rng)));
  return w;
}

}  // namespace oracles
