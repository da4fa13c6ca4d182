#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "relsched/graph.hpp"
#include "relsched/schedule.hpp"

namespace relsched {

/// Occurrence index over a schedule: positions of each edge, ascending.
/// Greedy earliest matching then runs in O(log L) per path edge.
class ScheduleIndex {
public:
  ScheduleIndex(const Schedule& s, int n) : n_(n), occurrences_(static_cast<std::size_t>(n) * n) {
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      const Edge& e = s.steps[i];
      occurrences_[static_cast<std::size_t>(e.tail) * n + e.head].push_back(static_cast<int>(i));
    }
  }

  /// Earliest occurrence of e at position >= cursor, or -1 if none.
  int first_at_or_after(const Edge& e, int cursor) const {
    const auto& pos = occurrences_[static_cast<std::size_t>(e.tail) * n_ + e.head];
    const auto it = std::lower_bound(pos.begin(), pos.end(), cursor);
    return it == pos.end() ? -1 : *it;
  }

private:
  int n_;
  std::vector<std::vector<int>> occurrences_;
};

/// True iff p's edges appear in s in path order (not necessarily
/// contiguously). Greedy matching to the earliest occurrence is optimal
/// for subsequence containment, so this decides containment exactly.
inline bool contains_path(const Schedule& s, const SimplePath& p) {
  if (p.vertices.size() <= 1) return true;  // empty edge sequence
  std::size_t cursor = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const Edge e{p.vertices[i], p.vertices[i + 1]};
    while (cursor < s.steps.size() && !(s.steps[cursor] == e)) ++cursor;
    if (cursor == s.steps.size()) return false;
    ++cursor;
  }
  return true;
}

enum class Verdict {
  Valid,    ///< every checked path is contained
  Invalid,  ///< a witness path is not contained
  Refused,  ///< the search budget was exhausted before a decision
};

/// Budget for exhaustive searches, measured in path-extension steps so
/// that refusals are deterministic and platform-independent.
struct SearchLimits {
  std::uint64_t max_steps = 100'000'000ULL;
};

struct ValidityReport {
  Verdict verdict = Verdict::Valid;
  std::optional<SimplePath> witness;  ///< present iff verdict == Invalid
  std::uint64_t paths_checked = 0;

  bool valid() const { return verdict == Verdict::Valid; }
  bool refused() const { return verdict == Verdict::Refused; }
};

namespace detail {

inline bool contains_path_indexed(const ScheduleIndex& index, const SimplePath& p) {
  int cursor = 0;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    const int pos = index.first_at_or_after({p.vertices[i], p.vertices[i + 1]}, cursor);
    if (pos < 0) return false;
    cursor = pos + 1;
  }
  return true;
}

inline ValidityReport check_k_paths(const Digraph& g, int k, const ScheduleIndex& index,
                                    const SearchLimits& limits, std::uint64_t& steps_used) {
  ValidityReport report;
  KPathStream stream(g, k);
  std::uint64_t seen_steps = 0;
  while (true) {
    const auto p = stream.next();
    steps_used += stream.extension_steps() - seen_steps;
    seen_steps = stream.extension_steps();
    if (steps_used > limits.max_steps) {
      report.verdict = Verdict::Refused;
      return report;
    }
    if (!p) return report;
    ++report.paths_checked;
    if (!contains_path_indexed(index, *p)) {
      report.verdict = Verdict::Invalid;
      report.witness = *p;
      return report;
    }
  }
}

}  // namespace detail

/// Exhaustive k-validity: does s contain every k-path of g? On failure the
/// witness is the first violating k-path in lexicographic order. A budget
/// refusal is reported distinctly from an invalid verdict.
inline ValidityReport is_k_valid(const Schedule& s, const Digraph& g, int k,
                                 const SearchLimits& limits = {}) {
  const ScheduleIndex index(s, g.n());
  std::uint64_t steps = 0;
  return detail::check_k_paths(g, k, index, limits, steps);
}

/// Full validity: k-valid for every k in 1..n-1. All lengths are checked;
/// containment of the longest paths does not by itself imply containment
/// of shorter ones in general graphs. The budget spans the whole check.
inline ValidityReport is_valid(const Schedule& s, const Digraph& g,
                               const SearchLimits& limits = {}) {
  const ScheduleIndex index(s, g.n());
  std::uint64_t steps = 0;
  ValidityReport total;
  for (int k = 1; k <= g.n() - 1; ++k) {
    ValidityReport r = detail::check_k_paths(g, k, index, limits, steps);
    total.paths_checked += r.paths_checked;
    if (r.verdict != Verdict::Valid) {
      total.verdict = r.verdict;
      total.witness = std::move(r.witness);
      return total;
    }
  }
  return total;
}

struct WitnessSearchResult {
  Verdict verdict = Verdict::Valid;  ///< Valid means no violating path exists
  std::optional<SimplePath> witness;
  std::uint64_t steps = 0;

  bool refused() const { return verdict == Verdict::Refused; }
};

namespace detail {

/// Depth-first extension over states (current vertex, visited set, greedy
/// cursor). Once a state has been fully explored at cursor c without
/// uncovering a violation, re-arrivals at the same (vertex, visited set)
/// with cursor <= c are pruned: failures only get easier as the cursor
/// grows, so the explored state subsumes them. Arrivals with a larger
/// cursor are re-explored.
class ViolatingPathSearch {
public:
  ViolatingPathSearch(const Schedule& s, const Digraph& g, const SearchLimits& limits)
      : g_(g), index_(s, g.n()), limits_(limits) {}

  WitnessSearchResult run() {
    path_.push_back(g_.source());
    visited_ = std::uint64_t{1} << g_.source();
    const bool completed = extend(g_.source(), 0);
    WitnessSearchResult result;
    result.steps = steps_;
    if (!completed) {
      result.verdict = witness_ ? Verdict::Invalid : Verdict::Refused;
      result.witness = std::move(witness_);
    }
    return result;
  }

private:
  // returns false when the search stopped early (violation found or budget out)
  bool extend(VertexId u, int cursor) {
    const std::uint64_t key = (visited_ << 6) | static_cast<std::uint64_t>(u);
    const auto it = explored_.find(key);
    if (it != explored_.end() && cursor <= it->second) return true;
    explored_[key] = cursor;
    for (VertexId v : g_.out_neighbors(u)) {
      if ((visited_ >> v) & 1) continue;
      if (++steps_ > limits_.max_steps) return false;
      const int pos = index_.first_at_or_after({u, v}, cursor);
      path_.push_back(v);
      if (pos < 0) {
        witness_ = SimplePath{path_};
        return false;
      }
      visited_ |= std::uint64_t{1} << v;
      const bool completed = extend(v, pos + 1);
      visited_ &= ~(std::uint64_t{1} << v);
      path_.pop_back();
      if (!completed) return false;
    }
    return true;
  }

  const Digraph& g_;
  ScheduleIndex index_;
  SearchLimits limits_;
  std::vector<VertexId> path_;
  std::uint64_t visited_ = 0;
  std::uint64_t steps_ = 0;
  std::optional<SimplePath> witness_;
  std::unordered_map<std::uint64_t, int> explored_;
};

}  // namespace detail

/// Finds some simple source path not contained in s, or none when the
/// schedule is valid. Sound and complete within the budget. The witness
/// depends on the (deterministic) search order, not on lexicographic rank.
inline WitnessSearchResult find_violating_path(const Schedule& s, const Digraph& g,
                                               const SearchLimits& limits = {}) {
  if (g.n() > 32)
    throw std::invalid_argument("find_violating_path: witness search supports at most 32 vertices");
  detail::ViolatingPathSearch search(s, g, limits);
  return search.run();
}

}  // namespace relsched
