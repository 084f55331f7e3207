#include "convlab/structure.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>

#include "convlab/error.hpp"

namespace convlab {

const char* to_string(ChromaticClass c) { return c == ChromaticClass::Class1 ? "Class1" : "Class2"; }

std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

bool is_cubic(const Graph& g) { return regular_degree(g) == 3; }

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  within.for_each([&](Vertex root) {
    if (seen.contains(root)) return;
    VertexSet comp(g.order());
    std::vector<Vertex> stack{root};
    seen.insert(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (Vertex w : g.neighbors(u)) {
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  });
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.all()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_independent(const Graph& g, const VertexSet& x) { return g.induced_edge_count(x) == 0; }

bool is_acyclic(const Graph& g, const VertexSet& x) {
  // A forest has exactly |X| - (#components) edges.
  const auto comps = components(g, x);
  return g.induced_edge_count(x) == x.size() - static_cast<int>(comps.size());
}

bool is_forest(const Graph& g) { return is_acyclic(g, g.all()); }

bool is_tree(const Graph& g) { return g.order() > 0 && is_connected(g) && g.edge_count() == g.order() - 1; }

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbor_set(u).intersects(g.neighbor_set(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Maximum independent set

namespace {

// Greedy clique cover of G[P]; its size bounds alpha(G[P]) from above.
int clique_cover_bound(const Graph& g, const VertexSet& p) {
  // Each entry holds the vertices adjacent to every member so far.
  std::vector<VertexSet> cliques;
  p.for_each([&](Vertex v) {
    for (std::size_t i = 0; i < cliques.size(); ++i) {
      if (cliques[i].contains(v)) {
        cliques[i] &= g.neighbor_set(v);
        return;
      }
    }
    cliques.push_back(g.neighbor_set(v) & p);
  });
  return static_cast<int>(cliques.size());
}

struct MisSearch {
  const Graph& g;
  VertexSet best;
  int best_size = -1;

  void run(VertexSet current, VertexSet cand) {
    // Degree <= 1 vertices in G[cand] can always be taken.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v : cand.members()) {
        if (!cand.contains(v)) continue;
        if ((g.neighbor_set(v) & cand).size() <= 1) {
          current.insert(v);
          cand.erase(v);
          cand -= g.neighbor_set(v);
          changed = true;
        }
      }
    }
    if (cand.empty()) {
      if (current.size() > best_size) {
        best_size = current.size();
        best = current;
      }
      return;
    }
    if (current.size() + clique_cover_bound(g, cand) <= best_size) return;

    Vertex pick = -1;
    int pick_deg = -1;
    cand.for_each([&](Vertex v) {
      const int d = (g.neighbor_set(v) & cand).size();
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    });
    VertexSet with = current;
    with.insert(pick);
    VertexSet cand_with = cand - g.neighbor_set(pick);
    cand_with.erase(pick);
    run(with, cand_with);
    VertexSet cand_without = cand;
    cand_without.erase(pick);
    run(current, cand_without);
  }
};

}  // namespace

VertexSet maximum_independent_set(const Graph& g) {
  MisSearch s{g, VertexSet(g.order())};
  s.run(VertexSet(g.order()), g.all());
  return s.best;
}

int independence_number(const Graph& g) { return maximum_independent_set(g).size(); }

// ---------------------------------------------------------------------------
// Cycles

std::vector<Vertex> shortest_cycle(const Graph& g, const VertexSet& x) {
  const int n = g.order();
  int best_len = n + 1;
  std::vector<Vertex> best;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  x.for_each([&](Vertex root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const int du = dist[static_cast<std::size_t>(u)];
      if (2 * du + 1 >= best_len) break;
      for (Vertex w : g.neighbors(u)) {
        if (!x.contains(w)) continue;
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = du + 1;
          parent[static_cast<std::size_t>(w)] = u;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          const int len = du + dist[static_cast<std::size_t>(w)] + 1;
          if (len >= best_len) continue;
          // Close the cycle at the lowest common ancestor of u and w.
          std::vector<Vertex> pu, pw;
          for (Vertex a = u; a != -1; a = parent[static_cast<std::size_t>(a)]) pu.push_back(a);
          for (Vertex a = w; a != -1; a = parent[static_cast<std::size_t>(a)]) pw.push_back(a);
          while (pu.size() >= 2 && pw.size() >= 2 && pu[pu.size() - 2] == pw[pw.size() - 2]) {
            pu.pop_back();
            pw.pop_back();
          }
          std::vector<Vertex> cyc(pu.begin(), pu.end());
          for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it) cyc.push_back(*it);
          if (static_cast<int>(cyc.size()) < best_len) {
            best_len = static_cast<int>(cyc.size());
            best = std::move(cyc);
          }
        }
      }
    }
  });
  return best;
}

std::optional<int> girth(const Graph& g) {
  const auto c = shortest_cycle(g, g.all());
  if (c.empty()) return std::nullopt;
  return static_cast<int>(c.size());
}

std::vector<std::vector<Vertex>> disjoint_cycle_packing(const Graph& g, const VertexSet& x) {
  std::vector<std::vector<Vertex>> out;
  VertexSet rest = x;
  while (true) {
    auto c = shortest_cycle(g, rest);
    if (c.empty()) break;
    for (Vertex v : c) rest.erase(v);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bridges

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> out;
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        const Vertex w = nb[f.next++];
        if (w == f.parent) continue;  // simple graph: one parent edge
        if (disc[static_cast<std::size_t>(w)] < 0) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p >= 0) {
          low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
          if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) out.emplace_back(std::min(p, v), std::max(p, v));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity via unit-capacity augmenting paths

namespace {

class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes)
      : n_(nodes), cap_(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), 0), adj_(static_cast<std::size_t>(nodes)) {}

  void add_arc(int a, int b, int c) {
    if (cap(a, b) == 0 && cap(b, a) == 0) {
      adj_[static_cast<std::size_t>(a)].push_back(b);
      adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    cap(a, b) += c;
  }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(n_));
    while (flow < limit) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[static_cast<std::size_t>(s)] = s;
      std::deque<int> q{s};
      while (!q.empty() && prev[static_cast<std::size_t>(t)] < 0) {
        const int a = q.front();
        q.pop_front();
        for (int b : adj_[static_cast<std::size_t>(a)]) {
          if (prev[static_cast<std::size_t>(b)] < 0 && cap(a, b) > 0) {
            prev[static_cast<std::size_t>(b)] = a;
            q.push_back(b);
          }
        }
      }
      if (prev[static_cast<std::size_t>(t)] < 0) break;
      for (int b = t; b != s; b = prev[static_cast<std::size_t>(b)]) {
        const int a = prev[static_cast<std::size_t>(b)];
        --cap(a, b);
        ++cap(b, a);
      }
      ++flow;
    }
    return flow;
  }

 private:
  int& cap(int a, int b) { return cap_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)]; }

  int n_;
  std::vector<int> cap_;
  std::vector<std::vector<int>> adj_;
};

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

int vertex_connectivity_capped(const Graph& g, int cap) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  if (is_complete(g)) return std::min(cap, n - 1);
  int best = std::min(cap, g.min_degree());
  for (Vertex s = 0; s < n && best > 0; ++s)
    for (Vertex t = s + 1; t < n && best > 0; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, local_vertex_connectivity(g, s, t, best));
  return best;
}

int edge_connectivity_capped(const Graph& g, int cap) {
  const int n = g.order();
  if (n <= 1) return 0;
  int best = std::min(cap, g.min_degree());
  for (Vertex t = 1; t < n && best > 0; ++t) best = std::min(best, local_edge_connectivity(g, 0, t, best));
  return best;
}

}  // namespace

int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  // v_in = 2v, v_out = 2v + 1.
  const int n = g.order();
  FlowNetwork net(2 * n);
  for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? n : 1);
  for (auto [u, v] : g.edges()) {
    net.add_arc(2 * u + 1, 2 * v, 1);
    net.add_arc(2 * v + 1, 2 * u, 1);
  }
  return net.max_flow(2 * s + 1, 2 * t, cap);
}

int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
  FlowNetwork net(g.order());
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  return net.max_flow(s, t, cap);
}

int vertex_connectivity(const Graph& g) { return vertex_connectivity_capped(g, g.order()); }
int edge_connectivity(const Graph& g) { return edge_connectivity_capped(g, g.order()); }
bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("connectivity threshold must be >= 1");
  return vertex_connectivity_capped(g, k) >= k;
}
bool is_k_edge_connected(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("connectivity threshold must be >= 1");
  return edge_connectivity_capped(g, k) >= k;
}

// ---------------------------------------------------------------------------
// Cyclic edge connectivity

bool cyclic_edge_connectivity_at_least(const Graph& g, int c, CyclicCutOptions opts) {
  if (!is_cubic(g)) throw PreconditionError("cyclic edge connectivity requires a cubic graph");
  if (c > 4) throw GuardError("cyclic edge connectivity supported only for c <= 4");
  if (g.edge_count() > opts.max_edges)
    throw GuardError("cut enumeration guard: " + std::to_string(g.edge_count()) + " edges > " +
                     std::to_string(opts.max_edges));
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  const int n = g.order();
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  std::vector<int> parent(static_cast<std::size_t>(n)), nodes(static_cast<std::size_t>(n)), arcs(static_cast<std::size_t>(n));

  auto cyclic_parts = [&]() {
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      return a;
    };
    for (int i = 0; i < m; ++i) {
      if (removed[static_cast<std::size_t>(i)]) continue;
      const int a = find(es[static_cast<std::size_t>(i)].first), b = find(es[static_cast<std::size_t>(i)].second);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::fill(nodes.begin(), nodes.end(), 0);
    std::fill(arcs.begin(), arcs.end(), 0);
    for (int v = 0; v < n; ++v) ++nodes[static_cast<std::size_t>(find(v))];
    for (int i = 0; i < m; ++i)
      if (!removed[static_cast<std::size_t>(i)]) ++arcs[static_cast<std::size_t>(find(es[static_cast<std::size_t>(i)].first))];
    int count = 0;
    for (int v = 0; v < n; ++v)
      if (nodes[static_cast<std::size_t>(v)] > 0 && arcs[static_cast<std::size_t>(v)] >= nodes[static_cast<std::size_t>(v)]) ++count;
    return count;
  };

  // Depth-first over subsets of size < c.
  std::function<bool(int, int)> any_cut = [&](int start, int left) -> bool {
    if (cyclic_parts() >= 2) return true;
    if (left == 0) return false;
    for (int i = start; i < m; ++i) {
      removed[static_cast<std::size_t>(i)] = 1;
      const bool hit = any_cut(i + 1, left - 1);
      removed[static_cast<std::size_t>(i)] = 0;
      if (hit) return true;
    }
    return false;
  };
  if (c <= 0) return true;
  return !any_cut(0, c - 1);
}

// ---------------------------------------------------------------------------
// 3-edge-colouring

namespace {

class EdgeColourer {
 public:
  explicit EdgeColourer(const Graph& g) : g_(g), edges_(g.edges()) {
    const int n = g.order();
    incident_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[static_cast<std::size_t>(edges_[i].first)].push_back(static_cast<int>(i));
      incident_[static_cast<std::size_t>(edges_[i].second)].push_back(static_cast<int>(i));
    }
    colour_.assign(edges_.size(), -1);
    used_.assign(static_cast<std::size_t>(n), 0);
    build_order();
  }

  std::optional<std::vector<int>> solve() {
    if (edges_.empty()) return colour_;
    if (search(0, 0)) return colour_;
    return std::nullopt;
  }

 private:
  // Edges in the order a DFS from the lowest vertex of each component meets them.
  void build_order() {
    const int n = g_.order();
    std::vector<char> seen_v(static_cast<std::size_t>(n), 0), seen_e(edges_.size(), 0);
    for (Vertex root = 0; root < n; ++root) {
      if (seen_v[static_cast<std::size_t>(root)]) continue;
      std::vector<Vertex> stack{root};
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        if (seen_v[static_cast<std::size_t>(u)]) continue;
        seen_v[static_cast<std::size_t>(u)] = 1;
        const auto& inc = incident_[static_cast<std::size_t>(u)];
        for (int e : inc) {
          if (!seen_e[static_cast<std::size_t>(e)]) {
            seen_e[static_cast<std::size_t>(e)] = 1;
            order_.push_back(e);
          }
        }
        for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
          const Vertex w = other(*it, u);
          if (!seen_v[static_cast<std::size_t>(w)]) stack.push_back(w);
        }
      }
    }
  }

  Vertex other(int e, Vertex u) const {
    const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
    return a == u ? b : a;
  }

  int domain(int e) const {
    const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
    return 7 & ~used_[static_cast<std::size_t>(a)] & ~used_[static_cast<std::size_t>(b)];
  }

  void assign(int e, int c) {
    colour_[static_cast<std::size_t>(e)] = c;
    used_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].first)] |= 1 << c;
    used_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].second)] |= 1 << c;
    trail_.push_back(e);
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const int e = trail_.back();
      trail_.pop_back();
      const int bit = 1 << colour_[static_cast<std::size_t>(e)];
      used_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].first)] &= ~bit;
      used_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].second)] &= ~bit;
      colour_[static_cast<std::size_t>(e)] = -1;
    }
  }

  // Unit propagation from the endpoints of freshly coloured edges.
  bool propagate(std::size_t from) {
    for (std::size_t i = from; i < trail_.size(); ++i) {
      const auto [a, b] = edges_[static_cast<std::size_t>(trail_[i])];
      for (Vertex v : {a, b}) {
        for (int f : incident_[static_cast<std::size_t>(v)]) {
          if (colour_[static_cast<std::size_t>(f)] >= 0) continue;
          const int dom = domain(f);
          if (dom == 0) return false;
          if ((dom & (dom - 1)) == 0) assign(f, std::countr_zero(static_cast<unsigned>(dom)));
        }
      }
    }
    return true;
  }

  // `palette` = number of colours already in use; unused colours are
  // interchangeable, so only the first unused one is tried.
  bool search(std::size_t pos, int palette) {
    while (pos < order_.size() && colour_[static_cast<std::size_t>(order_[pos])] >= 0) ++pos;
    if (pos == order_.size()) return true;
    const int e = order_[pos];
    const int dom = domain(e);
    for (int c = 0; c < 3; ++c) {
      if (!(dom & (1 << c))) continue;
      if (c > palette) break;
      const std::size_t mark = trail_.size();
      assign(e, c);
      if (propagate(mark)) {
        int next_palette = palette;
        for (std::size_t i = mark; i < trail_.size(); ++i)
          next_palette = std::max(next_palette, colour_[static_cast<std::size_t>(trail_[i])] + 1);
        if (search(pos + 1, next_palette)) return true;
      }
      undo_to(mark);
    }
    return false;
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> order_;
  std::vector<int> colour_;
  std::vector<int> used_;
  std::vector<int> trail_;
};

}  // namespace

std::optional<std::vector<int>> three_edge_colouring(const Graph& g) {
  if (g.max_degree() > 3) throw PreconditionError("3-edge-colouring needs maximum degree <= 3");
  EdgeColourer c(g);
  return c.solve();
}

bool is_3_edge_colourable(const Graph& g) { return three_edge_colouring(g).has_value(); }

ChromaticClass chromatic_class(const Graph& g) {
  if (!is_cubic(g)) throw PreconditionError("chromatic class is decided for cubic graphs only");
  if (!bridges(g).empty()) return ChromaticClass::Class2;
  return is_3_edge_colourable(g) ? ChromaticClass::Class1 : ChromaticClass::Class2;
}

StructureReport classify(const Graph& g) {
  StructureReport r;
  r.order = g.order();
  r.edge_count = g.edge_count();
  r.regular_degree = regular_degree(g);
  r.girth = girth(g);
  r.bridge_list = bridges(g);
  r.connected = is_connected(g);
  r.vertex_connectivity = vertex_connectivity(g);
  r.edge_connectivity = edge_connectivity(g);
  r.triangle_free = is_triangle_free(g);
  if (is_cubic(g)) {
    if (g.edge_count() <= CyclicCutOptions{}.max_edges) r.cyclically_4_connected = cyclic_edge_connectivity_at_least(g, 4);
    if (r.connected) r.chromatic_class = chromatic_class(g);
  }
  return r;
}

}  // namespace convlab
