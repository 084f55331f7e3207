#include "convlab/isomorphism.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace convlab {

namespace {

// Pattern vertices in BFS order so each new vertex usually touches a mapped one.
std::vector<Vertex> search_order(const Graph& p) {
  std::vector<Vertex> order;
  std::vector<char> seen(p.order(), 0);
  for (Vertex root = 0; root < p.order(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::deque<Vertex> q{root};
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop_front();
      order.push_back(u);
      for (Vertex w : p.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
    }
  }
  return order;
}

// Enumerates injective maps pattern -> host that preserve adjacency and
// non-adjacency. `exact_degree` additionally pins degrees (bijective use).
template <class Visit>
void embed(const Graph& host, const Graph& pattern, bool exact_degree, Visit&& visit) {
  const auto order = search_order(pattern);
  std::vector<Vertex> map(pattern.order(), -1);
  std::vector<char> used(host.order(), 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (stop) return;
    if (i == order.size()) {
      if (visit(map)) stop = true;
      return;
    }
    const Vertex p = order[i];
    // Restrict candidates to the neighbours of an already-mapped neighbour.
    Vertex anchor = -1;
    for (std::size_t j = 0; j < i && anchor < 0; ++j)
      if (pattern.has_edge(p, order[j])) anchor = map[order[j]];
    std::vector<Vertex> candidates;
    if (anchor >= 0) {
      const auto nb = host.neighbors(anchor);
      candidates.assign(nb.begin(), nb.end());
    } else {
      candidates.resize(host.order());
      for (Vertex h = 0; h < host.order(); ++h) candidates[h] = h;
    }
    for (Vertex h : candidates) {
      if (stop) break;
      if (used[h]) continue;
      if (exact_degree ? host.degree(h) != pattern.degree(p) : host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const Vertex q = order[j];
        if (pattern.has_edge(p, q) != host.has_edge(h, map[q])) ok = false;
      }
      if (!ok) continue;
      map[p] = h;
      used[h] = 1;
      self(self, i + 1);
      used[h] = 0;
      map[p] = -1;
    }
  };
  rec(rec, 0);
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (sorted_degrees(a) != sorted_degrees(b)) return std::nullopt;
  std::optional<std::vector<Vertex>> found;
  embed(b, a, true, [&](const std::vector<Vertex>& m) {
    found = m;
    return true;
  });
  return found;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::vector<VertexSet> induced_copies(const Graph& host, const Graph& pattern) {
  std::set<std::vector<Vertex>> seen;
  std::vector<VertexSet> out;
  embed(host, pattern, false, [&](const std::vector<Vertex>& m) {
    std::vector<Vertex> key = m;
    std::sort(key.begin(), key.end());
    if (seen.insert(key).second) out.emplace_back(host.order(), key);
    return false;
  });
  return out;
}

}  // namespace convlab
