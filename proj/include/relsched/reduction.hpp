#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "relsched/factorization.hpp"
#include "relsched/graph.hpp"
#include "relsched/schedule.hpp"

namespace relsched {

/// An all-permutations-supersequence instance: does T, a sequence over
/// {1, ..., n}, contain every permutation of {1, ..., n} as a subsequence?
struct ApsInstance {
  int n = 0;
  std::vector<int> symbols;  ///< T, entries in [1, n]

  void validate() const {
    if (n < 1) throw std::invalid_argument("ApsInstance: alphabet must be non-empty");
    for (const int t : symbols)
      if (t < 1 || t > n) throw std::invalid_argument("ApsInstance: symbol outside [1, n]");
  }
};

/// T re-encoded over the 0-based alphabet used by the universality checker.
inline SymbolSequence to_symbol_sequence(const ApsInstance& inst) {
  inst.validate();
  SymbolSequence t;
  t.alphabet_size = inst.n;
  t.symbols.reserve(inst.symbols.size());
  for (const int s : inst.symbols) t.symbols.push_back(s - 1);
  return t;
}

/// The reduction's vertex layout on 2n+1 vertices: s = 0, x_i = 2i-1,
/// y_i = 2i, special edge e_i = (x_i, y_i).
inline Edge special_edge(int i) { return Edge{2 * i - 1, 2 * i}; }

/// Output of the APS -> relaxation-validity reduction. The schedule is
/// S_1 || ... || S_|T| || R with S_i = R || (e_{t_i}); block start offsets
/// are retained so the structural claim "special edges appear exactly once
/// per block, in T's symbol order" stays mechanically checkable.
struct ReductionOutput {
  Digraph graph;
  Schedule schedule;
  std::vector<Edge> special_edges;        ///< e_1, ..., e_n
  std::vector<std::size_t> block_starts;  ///< |T|+1 entries: each S_i, then the trailing R
  std::size_t base_length = 0;            ///< |Q|
  std::size_t stripped_length = 0;        ///< |R|
};

/// The valid base schedule Q: plain round-robin on the 2n+1-vertex
/// complete graph with 2n rounds. Optimality is irrelevant here; O(n^3)
/// length is all the reduction needs.
inline Schedule build_base_schedule(int n) {
  if (n < 1) throw std::invalid_argument("build_base_schedule: n must be positive");
  const Digraph g = complete_digraph(2 * n + 1);
  return round_robin(g, 2 * n);
}

/// R: q with every occurrence of a special edge removed, order preserved.
inline Schedule strip_special_edges(const Schedule& q, const std::vector<Edge>& specials) {
  Schedule r;
  r.graph_n = q.graph_n;
  r.steps.reserve(q.steps.size());
  for (const Edge& step : q.steps)
    if (std::find(specials.begin(), specials.end(), step) == specials.end())
      r.steps.push_back(step);
  return r;
}

/// Full reduction: T is universal for {1, ..., n} iff the produced
/// schedule is valid for the produced graph. |S| = (|T|+1)|R| + |T|.
inline ReductionOutput aps_to_validity(const ApsInstance& inst) {
  inst.validate();
  const int n = inst.n;
  std::vector<Edge> specials;
  specials.reserve(n);
  for (int i = 1; i <= n; ++i) specials.push_back(special_edge(i));

  const Schedule q = build_base_schedule(n);
  const Schedule r = strip_special_edges(q, specials);

  Schedule s;
  s.graph_n = q.graph_n;
  s.steps.reserve((inst.symbols.size() + 1) * r.steps.size() + inst.symbols.size());
  std::vector<std::size_t> block_starts;
  for (const int t : inst.symbols) {
    block_starts.push_back(s.steps.size());
    s.steps.insert(s.steps.end(), r.steps.begin(), r.steps.end());
    s.steps.push_back(specials[t - 1]);
  }
  block_starts.push_back(s.steps.size());
  s.steps.insert(s.steps.end(), r.steps.begin(), r.steps.end());

  return ReductionOutput{complete_digraph(2 * n + 1), std::move(s), std::move(specials),
                         std::move(block_starts),     q.length(),   r.length()};
}

/// Decodes a violating path of the canonical gadget shape
/// (s, x_{i_1}, y_{i_1}, ..., x_{i_m}, y_{i_m}) into a permutation of
/// {1, ..., n} that is missing from T: the special-index sequence it
/// spells, completed with the unused symbols in ascending order when the
/// path uses fewer than n special edges (a supersequence of a missing
/// sequence is missing too). Witnesses of any other shape yield nullopt.
inline std::optional<std::vector<int>> decode_witness(const SimplePath& w,
                                                      const ReductionOutput& out) {
  const int n = static_cast<int>(out.special_edges.size());
  if (w.vertices.size() < 3 || w.vertices.size() % 2 == 0) return std::nullopt;
  if (w.vertices.front() != out.graph.source()) return std::nullopt;
  std::vector<int> indices;
  std::vector<bool> used(n + 1, false);
  for (std::size_t j = 1; j + 1 < w.vertices.size(); j += 2) {
    const VertexId a = w.vertices[j];
    const VertexId b = w.vertices[j + 1];
    if (a % 2 != 1 || b != a + 1) return std::nullopt;
    const int i = (a + 1) / 2;
    if (i < 1 || i > n || used[i]) return std::nullopt;
    used[i] = true;
    indices.push_back(i);
  }
  for (int i = 1; i <= n; ++i)
    if (!used[i]) indices.push_back(i);
  return indices;
}

}  // namespace relsched
