#include "convlab/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <optional>

#include "convlab/conversion.hpp"
#include "convlab/error.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

using Clock = std::chrono::steady_clock;

void require_threshold(int k) {
  if (k < 1) throw PreconditionError("threshold k must be >= 1");
}

// ---------------------------------------------------------------- oracle

// Closure test with one machine word per adjacency row (n <= 64).
class WordClosure {
 public:
  WordClosure(const Graph& g, int k) : n_(g.order()), k_(k), rows_(static_cast<std::size_t>(g.order()), 0) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) rows_[v] |= std::uint64_t{1} << w;
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  bool converts(std::uint64_t seed) const {
    std::uint64_t done = seed;
    bool grew = true;
    while (grew && done != full_) {
      grew = false;
      std::uint64_t todo = full_ & ~done;
      while (todo) {
        const int v = std::countr_zero(todo);
        todo &= todo - 1;
        if (std::popcount(rows_[v] & done) >= k_) {
          done |= std::uint64_t{1} << v;
          grew = true;
        }
      }
    }
    return done == full_;
  }

 private:
  int n_;
  int k_;
  std::vector<std::uint64_t> rows_;
  std::uint64_t full_ = 0;
};

void check_guard(const Graph& g, const SolverOptions& opts) {
  if (g.order() > opts.oracle_max_order)
    throw GuardError("oracle limited to order " + std::to_string(opts.oracle_max_order) + ", graph has order " +
                     std::to_string(g.order()));
}

// Calls visit(set) for converting subsets of size `size` in lex order until it returns true.
template <class Visit>
bool scan_size(const Graph& g, int k, int size, Visit&& visit) {
  const int n = g.order();
  if (n <= 64) {
    WordClosure closure(g, k);
    return for_each_subset_of_size(n, size, [&](const std::vector<Vertex>& idx) {
      std::uint64_t mask = 0;
      for (Vertex v : idx) mask |= std::uint64_t{1} << v;
      return closure.converts(mask) && visit(VertexSet(n, idx));
    });
  }
  return for_each_subset_of_size(n, size, [&](const std::vector<Vertex>& idx) {
    VertexSet s(n, idx);
    return is_conversion_set(g, s, k) && visit(s);
  });
}

// ---------------------------------------------------------------- branch-and-bound

template <int W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1U; }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  int and_count(const Bits& o) const {
    int c = 0;
    for (int i = 0; i < W; ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
    return r;
  }
  Bits operator&(const Bits& o) const {
    Bits r;
    for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
    return r;
  }
  template <class F>
  void for_each(F&& f) const {
    for (int i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

// Maximum X with G[X] r-degenerate. Nodes are (kept K, undecided U); the rest
// is discarded (D).
template <int W>
class DegenerateSearch {
 public:
  using Set = Bits<W>;

  DegenerateSearch(const Graph& g, int r) : g_(g), n_(g.order()), r_(r), adj_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) adj_[v].set(w);
    const auto d = regular_degree(g);
    if (d && *d > r) degree_ = *d;
  }

  std::int64_t nodes() const { return nodes_; }

  // Largest feasible kept set extending `keep` and avoiding `drop`, of size
  // at least `target`. With `first_only` the search stops at the first hit.
  std::optional<Set> run(const Set& keep, const Set& drop, int target, bool first_only) {
    best_size_ = target - 1;
    best_.reset();
    first_only_ = first_only;
    Set undecided;
    for (Vertex v = 0; v < n_; ++v)
      if (!keep.test(v) && !drop.test(v)) undecided.set(v);
    if (!degenerate(keep)) return std::nullopt;
    int drop_edges = 0;
    drop.for_each([&](int v) { drop_edges += adj_[v].and_count(drop); });
    stop_ = false;
    search(keep, undecided, drop, drop_edges / 2);
    return best_;
  }

  Set greedy() const {
    std::vector<Vertex> order(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g_.degree(a) < g_.degree(b); });
    Set kept;
    for (Vertex v : order) {
      kept.set(v);
      if (!degenerate(kept)) kept.reset(v);
    }
    return kept;
  }

  bool degenerate(Set x) const {
    bool changed = true;
    while (changed && x.any()) {
      changed = false;
      x.for_each([&](int v) {
        if (adj_[v].and_count(x) <= r_) {
          x.reset(v);
          changed = true;
        }
      });
    }
    return !x.any();
  }

 private:
  void search(Set kept, Set undecided, Set dropped, int drop_edges) {
    if (stop_) return;
    ++nodes_;
    // Reductions: low-degree vertices are always safe to keep; vertices that
    // would break degeneracy of the kept set must go.
    bool changed = true;
    while (changed) {
      changed = false;
      Set alive = kept | undecided;
      undecided.for_each([&](int u) {
        if (adj_[u].and_count(alive) <= r_) {
          kept.set(u);
          undecided.reset(u);
          changed = true;
        } else if (adj_[u].and_count(kept) > r_) {
          Set trial = kept;
          trial.set(u);
          if (!degenerate(trial)) {
            undecided.reset(u);
            alive.reset(u);
            drop_edges += adj_[u].and_count(dropped);
            dropped.set(u);
            changed = true;
          }
        }
      });
    }

    const int kept_size = kept.count();
    const int alive_size = kept_size + undecided.count();
    if (alive_size <= best_size_) return;
    if (!undecided.any()) {
      best_size_ = kept_size;
      best_ = kept;
      if (first_only_) stop_ = true;
      return;
    }
    if (upper_bound(kept, undecided, drop_edges, alive_size) <= best_size_) return;

    // Branch on a highest-degree vertex of G[K u U], lowest id on ties.
    const Set alive = kept | undecided;
    int pick = -1, pick_deg = -1;
    undecided.for_each([&](int u) {
      const int d = adj_[u].and_count(alive);
      if (d > pick_deg) {
        pick = u;
        pick_deg = d;
      }
    });
    Set und = undecided;
    und.reset(pick);
    {
      Set drop2 = dropped;
      drop2.set(pick);
      search(kept, und, drop2, drop_edges + adj_[pick].and_count(dropped));
    }
    Set keep2 = kept;
    keep2.set(pick);
    search(keep2, und, dropped, drop_edges);
  }

  int upper_bound(const Set& kept, const Set& undecided, int drop_edges, int alive_size) const {
    int ub = alive_size;
    if (degree_ > 0) {
      // Edge counting for d-regular G: (2d - 2r)|X| <= dn - r(r+1) - 2e(S), e(S) >= e(D).
      const int k = degree_ - r_;
      const int num = degree_ * n_ - r_ * (r_ + 1) - 2 * drop_edges;
      const int counted = num >= 0 ? num / (2 * k) : -1;
      ub = std::min(ub, std::max(counted, r_));
      if (ub <= best_size_) return ub;
    }
    if (r_ <= 1) ub = std::min(ub, alive_size - obstruction_packing(kept | undecided));
    return ub;
  }

  // Vertex-disjoint obstructions in G[alive]: edges for r = 0, cycles for
  // r = 1. Each one needs a discarded vertex.
  int obstruction_packing(Set alive) const {
    int found = 0;
    if (r_ == 0) {
      alive.for_each([&](int v) {
        if (!alive.test(v)) return;
        Set nb = adj_[v] & alive;
        if (nb.any()) {
          int w = -1;
          nb.for_each([&](int x) {
            if (w < 0) w = x;
          });
          alive.reset(v);
          alive.reset(w);
          ++found;
        }
      });
      return found;
    }
    while (true) {
      strip_to_2core(alive);
      if (!alive.any()) return found;
      const auto cycle = short_cycle(alive);
      if (cycle.empty()) return found;
      for (int v : cycle) alive.reset(v);
      ++found;
    }
  }

  void strip_to_2core(Set& alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      alive.for_each([&](int v) {
        if (adj_[v].and_count(alive) <= 1) {
          alive.reset(v);
          changed = true;
        }
      });
    }
  }

  // Shortest cycle through BFS from every root of `alive` (which is a 2-core).
  std::vector<int> short_cycle(const Set& alive) const {
    std::vector<int> best;
    std::vector<int> parent(static_cast<std::size_t>(n_)), depth(static_cast<std::size_t>(n_));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n_));
    alive.for_each([&](int root) {
      if (best.size() == 3) return;
      std::fill(depth.begin(), depth.end(), -1);
      queue.clear();
      queue.push_back(root);
      depth[root] = 0;
      parent[root] = -1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        if (!best.empty() && 2 * depth[u] + 1 >= static_cast<int>(best.size())) break;
        bool closed = false;
        (adj_[u] & alive).for_each([&](int w) {
          if (closed) return;
          if (depth[w] < 0) {
            depth[w] = depth[u] + 1;
            parent[w] = u;
            queue.push_back(w);
          } else if (w != parent[u] && depth[w] >= depth[u]) {
            // Non-tree edge u-w closes a cycle through their common ancestor.
            std::vector<int> left{u}, right{w};
            int a = u, b = w;
            while (depth[b] > depth[a]) right.push_back(b = parent[b]);
            while (a != b) {
              left.push_back(a = parent[a]);
              right.push_back(b = parent[b]);
            }
            right.pop_back();
            left.insert(left.end(), right.rbegin(), right.rend());
            if (best.empty() || left.size() < best.size()) best = std::move(left);
            closed = true;
          }
        });
        if (closed) break;
      }
    });
    return best;
  }

  const Graph& g_;
  int n_;
  int r_;
  int degree_ = 0;
  std::vector<Set> adj_;
  std::int64_t nodes_ = 0;
  int best_size_ = 0;
  std::optional<Set> best_;
  bool first_only_ = false;
  bool stop_ = false;
};

template <int W>
VertexSet solve_degenerate(const Graph& g, int r, std::int64_t* nodes) {
  using Set = Bits<W>;
  const int n = g.order();
  DegenerateSearch<W> search(g, r);
  const Set greedy = search.greedy();
  Set none;
  auto best = search.run(none, none, greedy.count() + 1, false);
  Set solution = best ? *best : greedy;
  const int target = solution.count();

  // Fix the complement lexicographically: put each vertex, in id order, into
  // the discarded side whenever some optimum allows it.
  Set keep, drop;
  for (Vertex v = 0; v < n; ++v) {
    if (!solution.test(v)) {
      drop.set(v);
      continue;
    }
    Set drop2 = drop;
    drop2.set(v);
    if (auto alt = search.run(keep, drop2, target, true)) {
      drop = drop2;
      solution = *alt;
    } else {
      keep.set(v);
    }
  }
  if (nodes) *nodes += search.nodes();
  std::vector<Vertex> members;
  keep.for_each([&](int v) { members.push_back(v); });
  return VertexSet(n, members);
}

}  // namespace

const char* to_string(SolveMethod m) { return m == SolveMethod::Oracle ? "Oracle" : "ComplementBnB"; }

SolveResult ck_oracle(const Graph& g, int k, const SolverOptions& opts) {
  require_threshold(k);
  check_guard(g, opts);
  const auto start = Clock::now();
  SolveResult res;
  res.method = SolveMethod::Oracle;
  for (int size = 0; size <= g.order(); ++size) {
    const bool found = scan_size(g, k, size, [&](const VertexSet& s) {
      res.witness = s;
      return true;
    });
    res.nodes_explored += 1;
    if (found) {
      res.value = size;
      break;
    }
  }
  res.elapsed = Clock::now() - start;
  return res;
}

VertexSet maximum_induced_degenerate(const Graph& g, int r, std::int64_t* nodes) {
  if (r < 0) throw PreconditionError("degeneracy parameter r must be >= 0");
  const int n = g.order();
  if (n <= 64) return solve_degenerate<1>(g, r, nodes);
  if (n <= 128) return solve_degenerate<2>(g, r, nodes);
  if (n <= 192) return solve_degenerate<3>(g, r, nodes);
  if (n <= 256) return solve_degenerate<4>(g, r, nodes);
  throw GuardError("branch-and-bound limited to order 256, graph has order " + std::to_string(n));
}

SolveResult ck_exact(const Graph& g, int k, const SolverOptions& opts) {
  require_threshold(k);
  const auto d = regular_degree(g);
  if (!d || *d < k) {
    // Below-threshold degrees never convert; everything else has no
    // complement characterization and goes to the oracle.
    if (d && *d < k) {
      SolveResult res;
      res.method = SolveMethod::ComplementBnB;
      res.value = g.order();
      res.witness = g.all();
      return res;
    }
    return ck_oracle(g, k, opts);
  }
  const auto start = Clock::now();
  SolveResult res;
  res.method = SolveMethod::ComplementBnB;
  const VertexSet kept = maximum_induced_degenerate(g, *d - k, &res.nodes_explored);
  res.witness = kept.complement();
  res.value = res.witness.size();
  res.elapsed = Clock::now() - start;
  return res;
}

int forest_number(const Graph& g) { return maximum_induced_degenerate(g, 1).size(); }

VertexSet minimum_decycling_set(const Graph& g) { return maximum_induced_degenerate(g, 1).complement(); }

std::vector<VertexSet> all_minimum_conversion_sets(const Graph& g, int k, const SolverOptions& opts) {
  require_threshold(k);
  check_guard(g, opts);
  const int c = ck_exact(g, k, opts).value;
  std::vector<VertexSet> out;
  scan_size(g, k, c, [&](const VertexSet& s) {
    out.push_back(s);
    return false;
  });
  return out;
}

}  // namespace convlab
