#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace relsched {

/// Vertices are dense indices in [0, n). Vertex 0 is the source by
/// convention; this makes bitset visited-tracking and matching indexing
/// trivial throughout the library.
using VertexId = int;

/// Directed edge (tail -> head). Loops are never valid.
struct Edge {
  VertexId tail = 0;
  VertexId head = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Simple directed graph. Immutable after construction and safe to share
/// read-only across concurrent workers. Complete digraphs are the main
/// instance family; arbitrary edge sets are accepted for experimentation.
class Digraph {
public:
  Digraph(int n, std::vector<Edge> edges, VertexId source = 0)
      : n_(n), source_(source), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("Digraph: need at least one vertex");
    if (source < 0 || source >= n) throw std::invalid_argument("Digraph: source out of range");
    for (const Edge& e : edges_) {
      if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n)
        throw std::invalid_argument("Digraph: edge endpoint out of range");
      if (e.tail == e.head) throw std::invalid_argument("Digraph: loops are not allowed");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
      throw std::invalid_argument("Digraph: duplicate edge");
    adjacency_.assign(static_cast<std::size_t>(n) * n, false);
    out_.assign(n, {});
    for (const Edge& e : edges_) {
      adjacency_[static_cast<std::size_t>(e.tail) * n + e.head] = true;
      out_[e.tail].push_back(e.head);  // ascending, since edges_ is sorted
    }
  }

  int n() const { return n_; }
  VertexId source() const { return source_; }

  /// Edge list in lexicographic (tail, head) order.
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(VertexId u, VertexId v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v];
  }
  bool has_edge(const Edge& e) const { return has_edge(e.tail, e.head); }

  /// Out-neighbors of u in ascending index order.
  const std::vector<VertexId>& out_neighbors(VertexId u) const { return out_[u]; }

  bool is_complete() const {
    return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1);
  }

private:
  int n_;
  VertexId source_;
  std::vector<Edge> edges_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<VertexId>> out_;
};

/// Complete digraph on n vertices: all n(n-1) ordered pairs, source 0.
inline Digraph complete_digraph(int n) {
  if (n < 1) throw std::invalid_argument("complete_digraph: n must be positive");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v) edges.push_back({u, v});
  return Digraph(n, std::move(edges));
}

/// Repetition-free vertex sequence. When used as a validity witness the
/// first vertex is the owning graph's source.
struct SimplePath {
  std::vector<VertexId> vertices;

  auto operator<=>(const SimplePath&) const = default;

  std::size_t edge_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  VertexId endpoint() const { return vertices.back(); }
};

inline bool is_simple(const SimplePath& p) {
  std::vector<VertexId> sorted = p.vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// Consecutive-pair edges in path order; empty for a single-vertex path.
inline std::vector<Edge> path_edges(const SimplePath& p) {
  if (p.vertices.empty()) throw std::invalid_argument("path_edges: empty path");
  std::vector<Edge> edges;
  edges.reserve(p.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    edges.push_back({p.vertices[i], p.vertices[i + 1]});
  return edges;
}

/// True iff p is a simple path of g rooted at the source.
inline bool is_source_path(const SimplePath& p, const Digraph& g) {
  if (p.vertices.empty() || p.vertices.front() != g.source()) return false;
  for (VertexId v : p.vertices)
    if (v < 0 || v >= g.n()) return false;
  if (!is_simple(p)) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
    if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return false;
  return true;
}

/// Lazily yields every simple source path with exactly k edges, in
/// lexicographic order of the vertex sequence. k-path counts grow
/// factorially, so callers consume the stream and may stop early.
/// Single-consumer.
class KPathStream {
public:
  KPathStream(const Digraph&& g, int k) = delete;  // the stream borrows the graph
  KPathStream(const Digraph& g, int k) : g_(&g), k_(k) {
    if (g.n() > 64)
      throw std::invalid_argument("KPathStream: enumeration supports at most 64 vertices");
    if (k < 0 || k > g.n() - 1) {
      done_ = true;  // out-of-range k yields an empty stream
      return;
    }
    path_.push_back(g.source());
    visited_ = std::uint64_t{1} << g.source();
    next_index_.push_back(0);
  }

  /// Extension steps consumed so far; the unit of the search budget.
  std::uint64_t extension_steps() const { return steps_; }

  std::optional<SimplePath> next() {
    if (done_) return std::nullopt;
    if (k_ == 0) {
      done_ = true;
      return SimplePath{path_};
    }
    while (true) {
      if (pop_pending_) {
        pop_pending_ = false;
        pop();
      }
      if (path_.empty()) {
        done_ = true;
        return std::nullopt;
      }
      const std::size_t depth = path_.size() - 1;
      const auto& nb = g_->out_neighbors(path_.back());
      std::size_t& idx = next_index_[depth];
      while (idx < nb.size() && (visited_ >> nb[idx]) & 1) ++idx;
      if (idx == nb.size()) {
        pop();
        continue;
      }
      const VertexId v = nb[idx++];
      ++steps_;
      path_.push_back(v);
      visited_ |= std::uint64_t{1} << v;
      next_index_.push_back(0);
      if (static_cast<int>(path_.size()) - 1 == k_) {
        pop_pending_ = true;
        return SimplePath{path_};
      }
    }
  }

private:
  void pop() {
    visited_ &= ~(std::uint64_t{1} << path_.back());
    path_.pop_back();
    next_index_.pop_back();
  }

  const Digraph* g_;
  int k_;
  bool done_ = false;
  bool pop_pending_ = false;
  std::vector<VertexId> path_;
  std::vector<std::size_t> next_index_;
  std::uint64_t visited_ = 0;
  std::uint64_t steps_ = 0;
};

}  // namespace relsched
