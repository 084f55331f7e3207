#include "convlab/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "convlab/catalog.hpp"
#include "convlab/conversion.hpp"
#include "convlab/error.hpp"
#include "convlab/random.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw Error("construction self-check failed: " + what);
}

int position_of(std::span<const Vertex> sorted, Vertex v) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

// Appends a copy of `h` shifted by `offset`.
void append_shifted(std::vector<Edge>& out, const Graph& h, int offset) {
  for (auto [u, v] : h.edges()) out.emplace_back(u + offset, v + offset);
}

}  // namespace

Graph join_with_empty(const Graph& h, int k) {
  if (h.order() != k) throw PreconditionError("join needs |V(H)| = k");
  const auto t = k == 0 ? std::optional<int>(0) : regular_degree(h);
  if (!t) throw PreconditionError("join needs a regular H");
  if (*t >= k) throw PreconditionError("join needs t < k");
  const int extra = k - *t;
  std::vector<Edge> es = h.edges();
  for (int i = 0; i < extra; ++i)
    for (Vertex v = 0; v < k; ++v) es.emplace_back(v, k + i);
  Graph g = Graph::from_edges(k + extra, es);
  VertexSet seed(g.order());
  for (Vertex v = 0; v < k; ++v) seed.insert(v);
  ensure(regular_degree(g) == k, "join output is k-regular");
  ensure(is_conversion_set(g, seed, k), "V(H) converts the join");
  return g;
}

VertexSet extremal_seed(int k) {
  VertexSet s(2 * k + 2);
  for (Vertex v = 0; v < k; ++v) s.insert(v);
  return s;
}

Graph extremal_regular(int k) {
  if (k < 2) throw PreconditionError("extremal construction needs k >= 2");
  const int n = 2 * k + 2;
  std::vector<Edge> es;
  std::vector<int> def(static_cast<std::size_t>(k), k - 1);  // deficiency of seed vertices after K_{2,k}
  const Vertex u1 = k, v1 = k + 1;
  for (Vertex s = 0; s < k; ++s) {
    es.emplace_back(s, u1);
    es.emplace_back(s, v1);
  }
  // Joins `x` to k-1 seed vertices of highest deficiency, lowest id first on ties.
  auto attach = [&](Vertex x) {
    std::vector<Vertex> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return def[a] > def[b]; });
    for (int i = 0; i < k - 1; ++i) {
      const Vertex s = order[static_cast<std::size_t>(i)];
      if (def[s] <= 0) throw Error("extremal construction ran out of deficient seed vertices");
      --def[s];
      es.emplace_back(s, x);
    }
  };
  auto total = [&] { return std::accumulate(def.begin(), def.end(), 0); };
  Vertex prev_u = u1, prev_v = v1, next = k + 2;
  while (total() >= 2 * (k - 1)) {
    const Vertex u = next++, v = next++;
    es.emplace_back(prev_u, u);
    attach(u);
    es.emplace_back(prev_v, v);
    attach(v);
    prev_u = u;
    prev_v = v;
  }
  if (k % 2 == 0) {
    es.emplace_back(prev_u, prev_v);
  } else {
    const Vertex w = next++;
    es.emplace_back(prev_u, w);
    es.emplace_back(prev_v, w);
    for (Vertex s = 0; s < k; ++s)
      if (def[s] == 1) es.emplace_back(s, w);
  }
  ensure(next == n, "extremal order is 2k+2");
  Graph g = Graph::from_edges(n, es);
  ensure(regular_degree(g) == k + 1, "extremal output is (k+1)-regular");
  ensure(is_conversion_set(g, extremal_seed(k), k), "seed of size k converts");
  return g;
}

BuildingBlock building_block(int i) {
  static const std::vector<Vertex> pairs[] = {{1, 4}, {1, 5}, {3, 5}, {1, 4}};
  if (i < 1 || i > 4) throw PreconditionError("building blocks are numbered 1..4");
  BuildingBlock b;
  b.graph = catalog("h" + std::to_string(i));
  for (Vertex v = 0; v < b.graph.order(); ++v)
    if (b.graph.degree(v) == 2) b.ports.push_back(v);
  b.conversion_pair = VertexSet(b.graph.order(), pairs[i - 1]);
  ensure(is_conversion_set(b.graph, b.conversion_pair, 2), "block conversion pair converts");
  return b;
}

Graph path_replacement(int m, int leaf_block) {
  if (m < 2) throw PreconditionError("path replacement needs m >= 2");
  if (leaf_block != 1 && leaf_block != 3) throw PreconditionError("path leaves must be H1 or H3");
  const BuildingBlock leaf = building_block(leaf_block);
  const BuildingBlock mid = building_block(2);
  std::vector<Edge> es;
  int offset = 0;
  Vertex previous_port = -1;
  for (int i = 0; i < m; ++i) {
    const bool is_leaf = i == 0 || i == m - 1;
    const BuildingBlock& b = is_leaf ? leaf : mid;
    append_shifted(es, b.graph, offset);
    const Vertex left = offset + b.ports.front();
    const Vertex right = offset + b.ports.back();
    if (previous_port >= 0) es.emplace_back(previous_port, left);
    previous_port = right;
    offset += b.graph.order();
  }
  Graph g = Graph::from_edges(offset, es);
  ensure(is_cubic(g), "path replacement is cubic");
  ensure(g.order() == (leaf_block == 1 ? 6 * m - 2 : 6 * m + 2), "path replacement order");
  ensure(static_cast<int>(bridges(g).size()) == m - 1, "path replacement has m-1 bridges");
  return g;
}

Graph cycle_replacement(int m, int block) {
  if (m < 3) throw PreconditionError("cycle replacement needs m >= 3");
  if (block != 2 && block != 4) throw PreconditionError("cycle blocks must be H2 or H4");
  const BuildingBlock b = building_block(block);
  const int size = b.graph.order();
  std::vector<Edge> es;
  for (int i = 0; i < m; ++i) {
    append_shifted(es, b.graph, i * size);
    es.emplace_back(i * size + b.ports.back(), ((i + 1) % m) * size + b.ports.front());
  }
  Graph g = Graph::from_edges(m * size, es);
  ensure(is_cubic(g), "cycle replacement is cubic");
  ensure(bridges(g).empty(), "cycle replacement is bridgeless");
  return g;
}

Graph triangle_replace(const Graph& g) {
  if (!is_cubic(g)) throw PreconditionError("triangle replacement needs a cubic graph");
  std::vector<Edge> es;
  for (Vertex v = 0; v < g.order(); ++v) {
    es.emplace_back(3 * v, 3 * v + 1);
    es.emplace_back(3 * v + 1, 3 * v + 2);
    es.emplace_back(3 * v, 3 * v + 2);
  }
  for (auto [u, v] : g.edges())
    es.emplace_back(3 * u + position_of(g.neighbors(u), v), 3 * v + position_of(g.neighbors(v), u));
  Graph t = Graph::from_edges(3 * g.order(), es);
  ensure(is_cubic(t), "triangle replacement is cubic");
  return t;
}

Graph product_GA(const Graph& g, const Graph& a, Vertex removed, std::uint64_t seed) {
  const auto rg = regular_degree(g), ra = regular_degree(a);
  if (!rg || !ra) throw PreconditionError("product needs regular G and A");
  if (*rg != *ra) throw PreconditionError("product needs G and A of the same degree");
  if (removed < 0 || removed >= a.order()) throw PreconditionError("removed vertex outside V(A)");
  std::vector<Vertex> old_ids;
  const Graph minus = a.without_vertices(VertexSet(a.order(), {removed}), &old_ids);
  std::vector<Vertex> ports;
  for (Vertex x : a.neighbors(removed))
    ports.push_back(static_cast<Vertex>(std::lower_bound(old_ids.begin(), old_ids.end(), x) - old_ids.begin()));
  const int size = minus.order();
  const int r = *rg;

  // choice[v][j]: port of copy v used for v's j-th smallest neighbour.
  std::vector<std::vector<int>> choice(static_cast<std::size_t>(g.order()), std::vector<int>(static_cast<std::size_t>(r)));
  Rng rng(seed);
  for (auto& c : choice) {
    std::iota(c.begin(), c.end(), 0);
    if (seed != 0) rng.shuffle(c);
  }

  std::vector<Edge> es;
  for (Vertex v = 0; v < g.order(); ++v) append_shifted(es, minus, v * size);
  for (auto [u, v] : g.edges()) {
    const Vertex pu = ports[choice[u][position_of(g.neighbors(u), v)]];
    const Vertex pv = ports[choice[v][position_of(g.neighbors(v), u)]];
    es.emplace_back(u * size + pu, v * size + pv);
  }
  Graph out = Graph::from_edges(g.order() * size, es);
  ensure(regular_degree(out) == r, "product is r-regular");
  return out;
}

Graph doubled_block(const Graph& b, Vertex u, Vertex v) {
  if (!is_cubic(b)) throw PreconditionError("doubled block needs a cubic B");
  if (b.order() % 4 != 2) throw PreconditionError("doubled block needs |V(B)| = 2 (mod 4)");
  if (u < 0 || v < 0 || u >= b.order() || v >= b.order() || !b.has_edge(u, v))
    throw PreconditionError("doubled block needs an edge uv of B");
  const auto gb = girth(b);
  if (!gb || *gb < 4) throw PreconditionError("doubled block needs girth >= 4");
  if (!is_k_connected(b, 3)) throw PreconditionError("doubled block needs a 3-connected B");

  std::vector<Vertex> old_ids;
  const Graph h = b.without_vertices(VertexSet(b.order(), {u, v}), &old_ids);
  auto local = [&](Vertex x) {
    return static_cast<Vertex>(std::lower_bound(old_ids.begin(), old_ids.end(), x) - old_ids.begin());
  };
  auto others = [&](Vertex x, Vertex skip) {
    std::vector<Vertex> out;
    for (Vertex w : b.neighbors(x))
      if (w != skip) out.push_back(local(w));
    return out;
  };
  const auto ab = others(u, v), cd = others(v, u);
  const int size = h.order();
  std::vector<Edge> es;
  append_shifted(es, h, 0);
  append_shifted(es, h, size);
  es.emplace_back(ab[0], size + ab[0]);
  es.emplace_back(ab[1], size + ab[1]);
  es.emplace_back(cd[0], size + cd[1]);
  es.emplace_back(cd[1], size + cd[0]);
  Graph out = Graph::from_edges(2 * size, es);
  ensure(is_cubic(out), "doubled block is cubic");
  ensure(is_k_edge_connected(out, 3), "doubled block is 3-edge-connected");
  return out;
}

Graph calG_member(const Graph& tree) {
  if (tree.order() < 2 || !is_tree(tree)) throw PreconditionError("calG member needs a tree with at least 2 vertices");
  for (Vertex t = 0; t < tree.order(); ++t)
    if (tree.degree(t) != 1 && tree.degree(t) != 3)
      throw PreconditionError("calG member needs every internal tree vertex to have degree 3");
  std::vector<int> offset(static_cast<std::size_t>(tree.order()));
  int n = 0;
  for (Vertex t = 0; t < tree.order(); ++t) {
    offset[t] = n;
    n += tree.degree(t) == 3 ? 3 : 5;
  }
  std::vector<Edge> es;
  for (Vertex t = 0; t < tree.order(); ++t) {
    const int o = offset[t];
    if (tree.degree(t) == 3) {
      es.insert(es.end(), {{o, o + 1}, {o + 1, o + 2}, {o, o + 2}});
    } else {
      es.insert(es.end(), {{o, o + 2}, {o, o + 3}, {o + 1, o + 2}, {o + 1, o + 3}, {o + 2, o + 3}, {o, o + 4}, {o + 1, o + 4}});
    }
  }
  auto port = [&](Vertex t, Vertex toward) {
    if (tree.degree(t) == 1) return offset[t] + 4;
    return offset[t] + position_of(tree.neighbors(t), toward);
  };
  for (auto [s, t] : tree.edges()) es.emplace_back(port(s, t), port(t, s));
  Graph g = Graph::from_edges(n, es);
  ensure(is_cubic(g), "calG member is cubic");
  return g;
}

Graph random_regular(int n, int d, std::uint64_t seed, bool connected) {
  if (n < 0 || d < 0 || d >= std::max(n, 1) || (n * d) % 2 != 0)
    throw PreconditionError("no simple " + std::to_string(d) + "-regular graph on " + std::to_string(n) + " vertices");
  Rng rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
      for (int i = 0; i < d; ++i) points.push_back(v);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    std::vector<Edge> es;
    bool stuck = false;
    while (!points.empty() && !stuck) {
      const Vertex u = points.back();
      points.pop_back();
      std::vector<std::size_t> options;
      for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i] != u && !adj[u].contains(points[i])) options.push_back(i);
      if (options.empty()) {
        stuck = true;
        break;
      }
      const std::size_t pick = options[rng.below(options.size())];
      const Vertex w = points[pick];
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(pick));
      adj[u].insert(w);
      adj[w].insert(u);
      es.emplace_back(u, w);
    }
    if (stuck) continue;
    Graph g = Graph::from_edges(n, es);
    if (connected && n > 0 && !is_connected(g)) continue;
    return g;
  }
  throw Error("random regular generator gave up");
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

}  // namespace convlab
