#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "relsched/graph.hpp"
#include "relsched/rational.hpp"
#include "relsched/schedule.hpp"

namespace relsched {

/// Distance value: a finite exact rational, or +infinity (nullopt).
/// +infinity is a distinguished value rather than a large sentinel, since
/// sentinel arithmetic breaks with negative weights.
using Dist = std::optional<Rational>;

inline Dist dist_add(const Dist& base, const Rational& w) {
  if (!base) return std::nullopt;  // inf + finite = inf
  return *base + w;
}

/// a < b with nullopt treated as +infinity.
inline bool dist_less(const Dist& a, const Dist& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

/// Total weight function on a graph's edges, stored densely by (tail, head).
class WeightAssignment {
public:
  explicit WeightAssignment(int n) : n_(n), w_(static_cast<std::size_t>(n) * n) {}

  /// Every edge of g gets the same weight.
  static WeightAssignment uniform(const Digraph& g, const Rational& value) {
    WeightAssignment w(g.n());
    for (const Edge& e : g.edges()) w.set(e, value);
    return w;
  }

  void set(const Edge& e, const Rational& value) { w_[index(e)] = value; }

  bool defined(const Edge& e) const { return w_[index(e)].has_value(); }

  const Rational& at(const Edge& e) const {
    const auto& v = w_[index(e)];
    if (!v) throw std::invalid_argument("WeightAssignment: weight undefined for edge");
    return *v;
  }

  bool total_on(const Digraph& g) const {
    for (const Edge& e : g.edges())
      if (!defined(e)) return false;
    return true;
  }

  int n() const { return n_; }

private:
  std::size_t index(const Edge& e) const {
    if (e.tail < 0 || e.tail >= n_ || e.head < 0 || e.head >= n_)
      throw std::invalid_argument("WeightAssignment: edge endpoint out of range");
    return static_cast<std::size_t>(e.tail) * n_ + e.head;
  }

  int n_;
  std::vector<std::optional<Rational>> w_;
};

/// Tentative (or final) distances from the source. Entries never increase
/// while a schedule executes.
struct DistanceVector {
  std::vector<Dist> d;

  const Dist& at(VertexId v) const { return d.at(v); }
  bool finite(VertexId v) const { return d.at(v).has_value(); }
  std::size_t size() const { return d.size(); }
  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;
};

/// Executes the schedule under exact relaxation semantics: d(source) = 0,
/// everything else +inf, then relax(e) for each step in order, where
/// relax((u,v)) sets d(v) <- min{d(v), d(u) + w(u,v)}.
/// Steps that are not edges of g are rejected before execution.
inline DistanceVector run_schedule(const Digraph& g, const WeightAssignment& w,
                                   const Schedule& s) {
  if (s.graph_n != g.n())
    throw std::invalid_argument("run_schedule: schedule targets a different vertex count");
  for (const Edge& e : s.steps)
    if (!g.has_edge(e)) throw std::invalid_argument("run_schedule: schedule step is not an edge of the graph");
  if (!w.total_on(g)) throw std::invalid_argument("run_schedule: weights not total on the graph");

  DistanceVector dist;
  dist.d.assign(g.n(), std::nullopt);
  dist.d[g.source()] = Rational(0);
  for (const Edge& e : s.steps) {
    const Dist candidate = dist_add(dist.d[e.tail], w.at(e));
    if (dist_less(candidate, dist.d[e.head])) {
      assert(!dist.d[e.head] || *candidate < *dist.d[e.head]);  // strict decrease
      dist.d[e.head] = candidate;
    }
  }
  return dist;
}

/// Names a vertex that lies on a negative-weight cycle reachable from the
/// source, certifying that some source distances are unbounded below.
struct NegativeCycleReport {
  VertexId vertex = -1;
};

struct ExactDistanceResult {
  std::optional<NegativeCycleReport> negative_cycle;
  DistanceVector distances;  ///< meaningful only when no negative cycle is reported

  bool ok() const { return !negative_cycle.has_value(); }
};

/// Ground-truth single-source distances by all-pairs dynamic programming
/// over n^3 triples, restricted to the source row on return. Deliberately
/// independent of any relaxation-sequence machinery, so it serves as an
/// oracle for schedule executions.
///
/// A negative cycle is reported only when it can affect a reported
/// distance, i.e. when some vertex with a negative closed walk is
/// reachable from the source. Negative cycles in parts of the graph the
/// source cannot reach are ignored; walks from the source never meet
/// them, so the source row is still exact.
inline ExactDistanceResult exact_distances(const Digraph& g, const WeightAssignment& w) {
  if (!w.total_on(g)) throw std::invalid_argument("exact_distances: weights not total on the graph");
  const int n = g.n();
  std::vector<std::vector<Dist>> dist(n, std::vector<Dist>(n));
  for (int i = 0; i < n; ++i) dist[i][i] = Rational(0);
  for (const Edge& e : g.edges()) {
    const Rational& we = w.at(e);
    if (!dist[e.tail][e.head] || we < *dist[e.tail][e.head]) dist[e.tail][e.head] = we;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      if (!dist[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!dist[k][j]) continue;
        const Rational through = *dist[i][k] + *dist[k][j];
        if (!dist[i][j] || through < *dist[i][j]) dist[i][j] = through;
      }
    }

  // reachability from the source over the unweighted edge set
  std::vector<bool> reachable(n, false);
  std::vector<VertexId> stack{g.source()};
  reachable[g.source()] = true;
  while (!stack.empty()) {
    const VertexId u = stack.back();
    stack.pop_back();
    for (VertexId v : g.out_neighbors(u))
      if (!reachable[v]) {
        reachable[v] = true;
        stack.push_back(v);
      }
  }

  ExactDistanceResult result;
  for (int v = 0; v < n; ++v)
    if (reachable[v] && dist[v][v] && dist[v][v]->is_negative()) {
      result.negative_cycle = NegativeCycleReport{v};
      return result;
    }
  result.distances.d = std::move(dist[g.source()]);
  return result;
}

/// Weights 0 on the given source path and 1 on every other edge. Under
/// this assignment a schedule reaches distance 0 at the path's endpoint
/// iff it contains the path as a subsequence.
inline WeightAssignment adversarial_weights(const Digraph& g, const SimplePath& p) {
  if (!is_source_path(p, g))
    throw std::invalid_argument("adversarial_weights: path must be a simple source path of the graph");
  WeightAssignment w = WeightAssignment::uniform(g, Rational(1));
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    w.set({p.vertices[i], p.vertices[i + 1]}, Rational(0));
  return w;
}

/// True iff some edge still reduces a tentative distance: d(u) + w(u,v) <
/// d(v). After a valid schedule this signals a reachable negative cycle;
/// after an invalid or truncated schedule it merely signals
/// non-convergence, so interpret it only downstream of a valid schedule.
inline bool detect_negative_cycle_residue(const Digraph& g, const WeightAssignment& w,
                                          const DistanceVector& d) {
  for (const Edge& e : g.edges())
    if (dist_less(dist_add(d.at(e.tail), w.at(e)), d.at(e.head))) return true;
  return false;
}

}  // namespace relsched
