#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "convlab/vertex_set.hpp"

namespace convlab {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Every vertex keeps a sorted neighbour list and a
/// bitmask row over the same universe; both views always agree.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate pairs collapse; an out-of-range
  /// endpoint or a self-loop throws PreconditionError naming the pair.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  static Graph empty(int n) { return from_edges(n, std::span<const Edge>{}); }

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  int max_degree() const;
  int min_degree() const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighbor_set(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(Vertex u, Vertex v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  VertexSet all() const { return VertexSet::full(n_); }

  /// Induced subgraph on `keep`; vertices renumbered in ascending order.
  /// `old_ids`, when given, receives new-id -> old-id.
  Graph induced(const VertexSet& keep, std::vector<Vertex>* old_ids = nullptr) const;
  Graph without_vertices(const VertexSet& drop, std::vector<Vertex>* old_ids = nullptr) const {
    return induced(drop.complement(), old_ids);
  }
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  /// Number of edges of G[X].
  int induced_edge_count(const VertexSet& x) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> rows_;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace convlab
