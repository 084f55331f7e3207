#include "convlab/graph.hpp"

#include <algorithm>
#include <string>

#include "convlab/error.hpp"

namespace convlab {

namespace {

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  g.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw PreconditionError("edge " + pair_text(u, v) + " has an endpoint outside 0.." +
                              std::to_string(n - 1));
    if (u == v) throw PreconditionError("self-loop " + pair_text(u, v));
    if (g.rows_[static_cast<std::size_t>(u)].contains(v)) continue;
    g.rows_[static_cast<std::size_t>(u)].insert(v);
    g.rows_[static_cast<std::size_t>(v)].insert(u);
    ++g.m_;
  }
  for (int v = 0; v < n; ++v) g.adj_[static_cast<std::size_t>(v)] = g.rows_[static_cast<std::size_t>(v)].members();
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep, std::vector<Vertex>* old_ids) const {
  std::vector<Vertex> ids = keep.members();
  std::vector<Vertex> new_id(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[static_cast<std::size_t>(ids[i])] = static_cast<Vertex>(i);
  std::vector<Edge> es;
  for (Vertex u : ids)
    for (Vertex v : neighbors(u))
      if (u < v && keep.contains(v)) es.emplace_back(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(v)]);
  if (old_ids != nullptr) *old_ids = ids;
  return from_edges(static_cast<int>(ids.size()), es);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto es = edges();
  es.emplace_back(u, v);
  return from_edges(n_, es);
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto es = edges();
  std::erase_if(es, [&](const Edge& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  return from_edges(n_, es);
}

int Graph::induced_edge_count(const VertexSet& x) const {
  int twice = 0;
  x.for_each([&](Vertex v) { twice += rows_[static_cast<std::size_t>(v)].intersection_size(x); });
  return twice / 2;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

}  // namespace convlab
