#include "convlab/degeneracy.hpp"

#include <deque>

#include "convlab/error.hpp"

namespace convlab {

DegeneracyResult is_r_degenerate(const Graph& g, const VertexSet& x, int r) {
  if (r < 0) throw PreconditionError("degeneracy parameter must be >= 0");
  const int n = g.order();
  std::vector<int> deg(n, 0);
  VertexSet alive = x;
  std::deque<Vertex> queue;
  std::vector<char> queued(n, 0);
  x.for_each([&](Vertex v) {
    deg[v] = (g.neighbor_set(v) & x).size();
    if (deg[v] <= r) {
      queue.push_back(v);
      queued[v] = 1;
    }
  });
  DegeneracyResult res;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    alive.erase(v);
    res.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (!alive.contains(w)) continue;
      if (--deg[w] <= r && !queued[w]) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  res.degenerate = alive.empty();
  res.core = std::move(alive);
  return res;
}

int degeneracy(const Graph& g) {
  int r = 0;
  while (!is_r_degenerate(g, r).degenerate) ++r;
  return r;
}

bool is_maximal_r_degenerate(const Graph& h, int r) {
  if (!is_r_degenerate(h, r).degenerate)
    throw PreconditionError("graph is not " + std::to_string(r) + "-degenerate");
  for (Vertex x = 0; x < h.order(); ++x)
    for (Vertex y = x + 1; y < h.order(); ++y)
      if (!h.has_edge(x, y) && is_r_degenerate(h.with_edge(x, y), r).degenerate) return false;
  return true;
}

long long degenerate_edge_ceiling(long long n, long long r) { return r * n - r * (r + 1) / 2; }

}  // namespace convlab
