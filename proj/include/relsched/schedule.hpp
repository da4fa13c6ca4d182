#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "relsched/graph.hpp"

namespace relsched {

/// A non-adaptive relaxation program: a finite sequence of directed edges,
/// fixed before any weights are seen. Immutable and shareable once built.
struct Schedule {
  int graph_n = 0;          ///< vertex count of the target graph
  std::vector<Edge> steps;  ///< relaxations in execution order

  std::size_t length() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
};

inline std::size_t schedule_length(const Schedule& s) { return s.steps.size(); }

/// A bijection on [0, n); the ordering underlying Yen's forward/backward
/// edge decomposition.
struct VertexOrder {
  std::vector<VertexId> order;  ///< order[i] = vertex at position i

  static VertexOrder identity(int n) {
    VertexOrder o;
    o.order.resize(n);
    std::iota(o.order.begin(), o.order.end(), 0);
    return o;
  }

  bool is_permutation_of(int n) const {
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (VertexId v : order) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  /// positions()[v] = position of vertex v in the order.
  std::vector<int> positions() const {
    std::vector<int> pos(order.size());
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    return pos;
  }
};

/// All edges in lexicographic (tail, head) order, repeated `rounds` times.
/// Any fixed per-round order would do; lexicographic is reproducible.
inline Schedule round_robin(const Digraph& g, int rounds) {
  if (rounds < 1) throw std::invalid_argument("round_robin: rounds must be positive");
  Schedule s;
  s.graph_n = g.n();
  s.steps.reserve(static_cast<std::size_t>(rounds) * g.edge_count());
  for (int r = 0; r < rounds; ++r)
    s.steps.insert(s.steps.end(), g.edges().begin(), g.edges().end());
  return s;
}

/// Default round count n-1, the classical bound (one round per path edge).
inline Schedule round_robin(const Digraph& g) {
  return round_robin(g, std::max(1, g.n() - 1));
}

/// Yen's alternating schedule. Odd half-passes relax every forward edge
/// (tail before head in `order`), iterating tails in ascending order
/// position and heads in ascending position per tail; even half-passes
/// relax every backward edge with tails in descending position and heads
/// in descending position. Both interior orders are topological for the
/// respective acyclic edge sets. Length = half_passes * n(n-1)/2.
///
/// n half-passes suffice for validity: a simple source path splits into at
/// most n-1 maximal runs that are monotone in the order, each run embeds
/// in one matching-direction half-pass, and at most one leading half-pass
/// is wasted when the first run's direction mismatches.
inline Schedule yen(const Digraph& g, const VertexOrder& order, int half_passes) {
  if (!g.is_complete()) throw std::invalid_argument("yen: graph must be complete");
  if (!order.is_permutation_of(g.n()))
    throw std::invalid_argument("yen: order must be a permutation of the vertices");
  if (half_passes < 1) throw std::invalid_argument("yen: half_passes must be positive");
  const int n = g.n();
  Schedule s;
  s.graph_n = n;
  s.steps.reserve(static_cast<std::size_t>(half_passes) * n * (n - 1) / 2);
  for (int pass = 1; pass <= half_passes; ++pass) {
    if (pass % 2 == 1) {
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
          s.steps.push_back({order.order[p], order.order[q]});
    } else {
      for (int p = n - 1; p >= 0; --p)
        for (int q = p - 1; q >= 0; --q)
          s.steps.push_back({order.order[p], order.order[q]});
    }
  }
  return s;
}

/// Yen with the default n half-passes.
inline Schedule yen(const Digraph& g, const VertexOrder& order) {
  return yen(g, order, g.n());
}

/// Uniform random vertex order, reproducible from the seed on every
/// platform (explicit Fisher-Yates over mt19937_64; std::shuffle is
/// implementation-defined).
inline VertexOrder random_vertex_order(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    std::uint64_t r;
    do {
      r = rng();
    } while (r < threshold);
    return r % bound;
  };
  VertexOrder o = VertexOrder::identity(n);
  for (int i = n - 1; i > 0; --i)
    std::swap(o.order[i], o.order[draw(static_cast<std::uint64_t>(i) + 1)]);
  return o;
}

/// Yen applied to a seeded uniformly random vertex order, n half-passes.
/// Deterministic given the seed.
inline Schedule randomized_yen(const Digraph& g, std::uint64_t seed) {
  if (!g.is_complete()) throw std::invalid_argument("randomized_yen: graph must be complete");
  return yen(g, random_vertex_order(g.n(), seed), g.n());
}

}  // namespace relsched
