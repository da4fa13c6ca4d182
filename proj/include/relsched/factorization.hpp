#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relsched/graph.hpp"
#include "relsched/rational.hpp"
#include "relsched/schedule.hpp"

namespace relsched {

/// Unordered vertex pair, stored with a < b.
struct UndirectedPair {
  VertexId a = 0;
  VertexId b = 0;

  UndirectedPair() = default;
  UndirectedPair(VertexId x, VertexId y) : a(std::min(x, y)), b(std::max(x, y)) {}
  auto operator<=>(const UndirectedPair&) const = default;
};

/// Pairwise non-incident undirected pairs over V \ {s}.
using Matching = std::vector<UndirectedPair>;

enum class Orientation { Ascending, Descending };

/// A matching with every edge directed low-to-high index (ascending) or
/// high-to-low (descending). Edges are kept in lexicographic order.
struct OrientedMatching {
  std::vector<Edge> edges;
  Orientation orientation = Orientation::Ascending;

  int size() const { return static_cast<int>(edges.size()); }
};

/// The ordered collection F_1, H_1, ..., F_m, H_m of pairwise disjoint
/// oriented matchings used by the lower-bound argument.
using MatchingFamily = std::vector<OrientedMatching>;

/// 1-factorization of the complete undirected graph on vertices
/// {v_1, ..., v_N}, i.e. graph indices 1..N, by the circle method (fix one
/// vertex, rotate the rest). Even N gives N-1 perfect matchings of size
/// N/2 covering every pair; odd N ignores the highest-indexed vertex and
/// factorizes the remaining N-1, giving N-2 matchings of size (N-1)/2.
inline std::vector<Matching> one_factorization(int N) {
  if (N < 2) throw std::invalid_argument("one_factorization: need at least 2 vertices");
  const int even = N % 2 == 0 ? N : N - 1;  // odd case: drop v_N
  std::vector<Matching> rounds;
  rounds.reserve(even - 1);
  for (int r = 0; r < even - 1; ++r) {
    Matching m;
    m.reserve(even / 2);
    m.emplace_back(even, r + 1);  // fixed vertex v_even paired with the rotating seat
    for (int i = 1; i < even / 2; ++i) {
      const int x = (r + i) % (even - 1);
      const int y = (r - i + (even - 1)) % (even - 1);
      m.emplace_back(x + 1, y + 1);
    }
    std::sort(m.begin(), m.end());
    rounds.push_back(std::move(m));
  }
  return rounds;
}

namespace detail {

inline OrientedMatching orient(const Matching& m, Orientation o) {
  OrientedMatching om;
  om.orientation = o;
  om.edges.reserve(m.size());
  for (const UndirectedPair& p : m)
    om.edges.push_back(o == Orientation::Ascending ? Edge{p.a, p.b} : Edge{p.b, p.a});
  std::sort(om.edges.begin(), om.edges.end());
  return om;
}

}  // namespace detail

/// Factorizes the complete undirected graph on {v_1, ..., v_{n-1}}, keeps
/// the first n-3 matchings in rotation order, and orients each both ways:
/// 2(n-3) oriented matchings, pairwise disjoint as directed-edge sets, in
/// the order F_1, H_1, ..., F_{n-3}, H_{n-3}.
inline MatchingFamily build_family(const Digraph& g) {
  if (!g.is_complete()) throw std::invalid_argument("build_family: graph must be complete");
  const int n = g.n();
  if (n < 4) throw std::invalid_argument("build_family: need at least 4 vertices");
  const std::vector<Matching> rounds = one_factorization(n - 1);
  MatchingFamily family;
  family.reserve(2 * (n - 3));
  for (int i = 0; i < n - 3; ++i) {
    family.push_back(detail::orient(rounds[i], Orientation::Ascending));
    family.push_back(detail::orient(rounds[i], Orientation::Descending));
  }
  return family;
}

/// Sequence over a finite alphabet, symbols in [0, alphabet_size).
struct SymbolSequence {
  int alphabet_size = 0;
  std::vector<int> symbols;

  std::size_t length() const { return symbols.size(); }
};

/// The maximal subsequence of s consisting of edges of f, in schedule
/// order, encoded over f's edge list: symbol i is f.edges[i].
inline SymbolSequence extract_subsequence(const Schedule& s, const OrientedMatching& f) {
  SymbolSequence t;
  t.alphabet_size = f.size();
  for (const Edge& step : s.steps) {
    const auto it = std::lower_bound(f.edges.begin(), f.edges.end(), step);
    if (it != f.edges.end() && *it == step)
      t.symbols.push_back(static_cast<int>(it - f.edges.begin()));
  }
  return t;
}

enum class PermCheckStatus { Universal, MissingFound, Refused };

struct PermutationCheck {
  PermCheckStatus status = PermCheckStatus::Universal;
  std::vector<int> missing;  ///< lexicographically first missing permutation, if any

  bool universal() const { return status == PermCheckStatus::Universal; }
};

namespace detail {

inline bool greedy_subsequence(const std::vector<int>& pattern, const std::vector<int>& text) {
  std::size_t cursor = 0;
  for (const int sym : pattern) {
    while (cursor < text.size() && text[cursor] != sym) ++cursor;
    if (cursor == text.size()) return false;
    ++cursor;
  }
  return true;
}

}  // namespace detail

/// Does t contain every permutation of its alphabet as a subsequence?
/// Permutations are tried in lexicographic order with the greedy matcher,
/// so a missing-permutation witness is reproducible. Alphabets larger than
/// max_alphabet are refused (k! checks explode).
inline PermutationCheck contains_all_permutations(const SymbolSequence& t, int max_alphabet = 8) {
  for (const int sym : t.symbols)
    if (sym < 0 || sym >= t.alphabet_size)
      throw std::invalid_argument("contains_all_permutations: symbol outside the alphabet");
  PermutationCheck result;
  if (t.alphabet_size > max_alphabet) {
    result.status = PermCheckStatus::Refused;
    return result;
  }
  std::vector<int> perm(t.alphabet_size);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (!detail::greedy_subsequence(perm, t.symbols)) {
      result.status = PermCheckStatus::MissingFound;
      result.missing = perm;
      return result;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

namespace detail {

/// Depth-first search for a universal sequence of exactly the given
/// length. Two completeness-preserving restrictions shrink the space:
/// symbols must first appear in canonical order 0, 1, 2, ... (universality
/// is invariant under alphabet renaming), and adjacent repeats are skipped
/// (deleting one of two equal neighbours keeps universality, and any
/// sequence can be padded back to length with a symbol different from its
/// last). Prunes on the remaining-permutations lower bound.
class UniversalSequenceSearch {
public:
  explicit UniversalSequenceSearch(int k) : k_(k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      perms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    matched_.assign(perms_.size(), 0);
  }

  bool exists_of_length(int length) {
    length_ = length;
    return extend(0, 0, -1);
  }

private:
  bool extend(int pos, int introduced, int last) {
    int need = 0;
    for (std::size_t p = 0; p < perms_.size(); ++p) need = std::max(need, k_ - matched_[p]);
    if (need == 0) return true;
    if (need > length_ - pos) return false;
    const int symbol_limit = std::min(introduced, k_ - 1);
    for (int sym = 0; sym <= symbol_limit; ++sym) {
      if (sym == last) continue;
      std::vector<std::size_t> advanced;  // per-frame undo list
      for (std::size_t p = 0; p < perms_.size(); ++p)
        if (matched_[p] < k_ && perms_[p][matched_[p]] == sym) {
          ++matched_[p];
          advanced.push_back(p);
        }
      const int new_introduced = sym == introduced ? introduced + 1 : introduced;
      if (extend(pos + 1, new_introduced, sym)) return true;
      for (const std::size_t p : advanced) --matched_[p];
    }
    return false;
  }

  int k_;
  int length_ = 0;
  std::vector<std::vector<int>> perms_;
  std::vector<int> matched_;
};

}  // namespace detail

/// Exact c_k, the smallest length of a sequence over a k-symbol alphabet
/// containing every permutation as a subsequence, by iterative deepening.
/// The search explodes beyond k = 4, which is refused.
inline int shortest_universal_length(int k) {
  if (k < 1) throw std::invalid_argument("shortest_universal_length: alphabet must be non-empty");
  if (k > 4) throw std::invalid_argument("shortest_universal_length: exact search supports k <= 4");
  detail::UniversalSequenceSearch search(k);
  for (int length = k;; ++length)
    if (search.exists_of_length(length)) return length;
}

/// A certified lower bound on c_k: exact for k <= 4 (computed once by the
/// exhaustive search), and the elementary 2k-1 beyond that (the ascending
/// and descending permutations need increasing resp. decreasing
/// subsequences of length k that can share at most one element).
inline long long universal_length_lower_bound(int k) {
  if (k <= 0) return 0;
  if (k <= 4) {
    static const int exact[4] = {shortest_universal_length(1), shortest_universal_length(2),
                                 shortest_universal_length(3), shortest_universal_length(4)};
    return exact[k - 1];
  }
  return 2LL * k - 1;
}

/// Exact-arithmetic evaluation of `length > k^2 - C_eps * k^(7/4 + eps)`.
/// A reporting utility for the Kleitman-Kwiatkowski bound shape, not a
/// proof: C_eps is a caller-supplied parameter. Rational exponents are
/// compared by raising both sides to the denominator power over big
/// integers.
inline bool kleitman_bound_holds(int k, long long length, const Rational& eps,
                                 const Rational& c_eps) {
  using boost::multiprecision::cpp_int;
  if (k < 1) throw std::invalid_argument("kleitman_bound_holds: k must be positive");
  const Rational exponent = Rational(7, 4) + eps;
  if (exponent.is_negative())
    throw std::invalid_argument("kleitman_bound_holds: exponent must be non-negative");
  const auto p = static_cast<unsigned>(exponent.num());
  const auto q = static_cast<unsigned>(exponent.den());

  // length > k^2 - C*k^(p/q)  <=>  a * k^(p/q) > (k^2 - length) * b,  C = a/b, b > 0
  const cpp_int a = c_eps.num();
  const cpp_int rhs = (cpp_int(k) * k - length) * c_eps.den();
  const cpp_int k_pow_p = boost::multiprecision::pow(cpp_int(k), p);
  if (a == 0) return rhs < 0;
  if (a > 0) {
    if (rhs < 0) return true;
    return boost::multiprecision::pow(a, q) * k_pow_p > boost::multiprecision::pow(rhs, q);
  }
  if (rhs >= 0) return false;
  return boost::multiprecision::pow(-a, q) * k_pow_p < boost::multiprecision::pow(-rhs, q);
}

/// Builds the violating-path gadget (s, x_1, y_1, x_2, y_2, ...) for a
/// permutation (e_1, ..., e_m) of matching edges, e_i = (x_i, y_i):
/// connector edges (s, x_1), (y_1, x_2), ... interleave the given edges.
/// Edges must be pairwise non-incident, avoid the source, and exist in g
/// along with every connector.
inline SimplePath gadget_path(const std::vector<Edge>& permuted_edges, const Digraph& g) {
  if (permuted_edges.empty()) throw std::invalid_argument("gadget_path: need at least one edge");
  std::vector<VertexId> endpoints;
  for (const Edge& e : permuted_edges) {
    if (e.tail == g.source() || e.head == g.source())
      throw std::invalid_argument("gadget_path: matching edges must avoid the source");
    if (!g.has_edge(e)) throw std::invalid_argument("gadget_path: edge not in the graph");
    endpoints.push_back(e.tail);
    endpoints.push_back(e.head);
  }
  std::vector<VertexId> sorted = endpoints;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("gadget_path: edges must be pairwise non-incident");

  SimplePath p;
  p.vertices.push_back(g.source());
  for (const Edge& e : permuted_edges) {
    if (!g.has_edge(p.vertices.back(), e.tail))
      throw std::invalid_argument("gadget_path: missing connector edge");
    p.vertices.push_back(e.tail);
    p.vertices.push_back(e.head);
  }
  return p;
}

/// Result of auditing a schedule against the matching-family lower bound.
struct LowerBoundAudit {
  int family_size = 0;
  std::vector<int> per_member_lengths;  ///< |S_F| per family member
  bool all_universal = false;
  bool refused = false;  ///< some member's universality check exceeded the alphabet cap
  long long certified_lower_bound = 0;  ///< every valid schedule has at least this length
  long long schedule_len = 0;
};

/// Extracts S_F for every family member, checks permutation universality,
/// and totals the per-member certified bounds. The bound is a property of
/// n alone; the universality flags are about this schedule. For a valid
/// schedule every member must be universal, so a non-universal member on a
/// schedule known valid falsifies the implementation.
inline LowerBoundAudit audit_lower_bound(const Schedule& s, const Digraph& g,
                                         int max_alphabet = 8) {
  if (s.graph_n != g.n())
    throw std::invalid_argument("audit_lower_bound: schedule targets a different vertex count");
  const MatchingFamily family = build_family(g);
  LowerBoundAudit audit;
  audit.family_size = static_cast<int>(family.size());
  audit.schedule_len = static_cast<long long>(s.length());
  audit.all_universal = true;
  for (const OrientedMatching& f : family) {
    const SymbolSequence t = extract_subsequence(s, f);
    audit.per_member_lengths.push_back(static_cast<int>(t.length()));
    const PermutationCheck check = contains_all_permutations(t, max_alphabet);
    if (check.status == PermCheckStatus::Refused)
      audit.refused = true;
    else if (check.status == PermCheckStatus::MissingFound)
      audit.all_universal = false;
    audit.certified_lower_bound += universal_length_lower_bound(f.size());
  }
  if (audit.refused) audit.all_universal = false;
  return audit;
}

}  // namespace relsched
