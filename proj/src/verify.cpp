#include "convlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "convlab/bounds.hpp"
#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/conversion.hpp"
#include "convlab/degeneracy.hpp"
#include "convlab/error.hpp"
#include "convlab/isomorphism.hpp"
#include "convlab/random.hpp"
#include "convlab/solver.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  explicit Suite(int limit) : limit(limit) {}

  void check(const std::string& recipe, std::string expected, std::string observed, bool pass) {
    instances.push_back({recipe, std::move(expected), std::move(observed), pass});
  }

  void equal(const std::string& recipe, const std::string& what, long long expected, long long observed) {
    check(recipe, what + " = " + std::to_string(expected), what + " = " + std::to_string(observed),
          expected == observed);
  }

  void holds(const std::string& recipe, const std::string& what, bool ok, const std::string& detail = {}) {
    check(recipe, what, ok ? (detail.empty() ? "holds" : detail) : "fails" + (detail.empty() ? "" : ": " + detail), ok);
  }

  int limit;
  std::vector<VerificationInstance> instances;
};

std::string with(const Recipe& r, const std::string& extra) { return r.to_string() + " " + extra; }

CorpusEntry make(const Recipe& r) { return {r, build(r)}; }

int c2(const Graph& g) { return ck_exact(g, 2).value; }

long long ceil_div(long long a, long long b) { return Rational(a, b).ceil(); }

VertexSet random_subset(Rng& rng, int n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
  rng.shuffle(ids);
  ids.resize(static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n) + 1)));
  return VertexSet(n, ids);
}

// Conversion layers of a trace: |S1| and |union of S_t for t >= 2|.
std::pair<int, int> layer_sizes(const Graph& g, const VertexSet& seed, int k) {
  const auto tr = run_process(g, seed, k);
  const int s1 = tr.layers.size() > 1 ? tr.layers[1].size() : 0;
  return {s1, tr.converted_from(2).size()};
}

// ------------------------------------------------------------ shared instance lists

struct SeedInstance {
  Recipe recipe;
  Graph graph;
  int k;
  std::vector<VertexSet> seeds;  // every k-conversion set of size k
};

// (k+1)-regular graphs with a k-conversion set of size k.
std::vector<SeedInstance> seed_layer_instances(int limit) {
  std::vector<SeedInstance> out;
  auto add = [&](const Recipe& r, const Graph& g, int k) {
    if (g.order() > std::max(limit, 2 * k + 2)) return;
    SeedInstance inst{r, g, k, {}};
    for_each_subset_of_size(g.order(), k, [&](const std::vector<Vertex>& idx) {
      VertexSet s(g.order(), idx);
      if (is_conversion_set(g, s, k)) inst.seeds.push_back(s);
      return false;
    });
    if (!inst.seeds.empty()) out.push_back(std::move(inst));
  };
  for (int k = 2; k <= 6; ++k) {
    const Recipe r = recipes::extremal_regular(k);
    add(r, build(r), k);
  }
  add(recipes::catalog("sharp8"), catalog("sharp8"), 3);
  for (const auto& e : cubic_corpus(std::min(limit, 12))) add(e.recipe, e.graph, 2);
  for (const auto& e : random_regular_corpus(4, 6, 10, 3, 41)) add(e.recipe, e.graph, 3);
  for (const auto& e : random_regular_corpus(5, 6, 12, 2, 43)) add(e.recipe, e.graph, 4);
  return out;
}

// t-regular catalog graphs of order k.
std::vector<std::string> regular_hosts(int t, int k) {
  std::vector<std::string> out;
  if ((t * k) % 2 != 0 || t >= k) return out;
  if (t == 0) out.push_back("empty-" + std::to_string(k));
  if (t == 1) out.push_back("matching-" + std::to_string(k));
  if (t == 2 && k >= 3) out.push_back("cycle-" + std::to_string(k));
  if (t == 3 && k == 6) {
    out.push_back("k33");
    out.push_back("prism");
  }
  if (t == 4 && k == 6) out.push_back("octahedron");
  if (t == k - 1 && out.empty()) out.push_back("complete-" + std::to_string(k));
  return out;
}

std::vector<CorpusEntry> regular_45_corpus(int limit) {
  std::vector<CorpusEntry> out;
  for (const char* name : {"octahedron", "complete-5", "sharp8", "complete-6"}) out.push_back(make(recipes::catalog(name)));
  out.push_back(make(recipes::extremal_regular(3)));
  out.push_back(make(recipes::extremal_regular(4)));
  for (auto& e : random_regular_corpus(4, 7, std::min(limit, 16), 2, 51)) out.push_back(std::move(e));
  for (auto& e : random_regular_corpus(5, 8, std::min(limit, 16), 2, 53)) out.push_back(std::move(e));
  std::erase_if(out, [&](const CorpusEntry& e) { return e.graph.order() > limit; });
  return out;
}

struct ProductCase {
  Recipe g, a;
  Vertex removed;
  std::uint64_t seed;
};

Recipe product_recipe(const ProductCase& p) { return recipes::product(p.g, p.a, p.removed, p.seed); }

std::vector<ProductCase> product_cases() {
  using recipes::catalog;
  return {
      {catalog("k4"), catalog("g1"), 0, 0},         {catalog("k4"), catalog("g2"), 0, 0},
      {catalog("k4"), catalog("q3"), 0, 0},         {catalog("k4"), catalog("g1"), 3, 7},
      {catalog("k4"), catalog("petersen"), 0, 0},   {catalog("petersen"), catalog("k4"), 0, 0},
      {catalog("k33"), catalog("cubic12"), 11, 0},  {catalog("k33"), catalog("heawood"), 0, 0},
      {catalog("k4"), catalog("heawood"), 5, 3},    {catalog("k33"), catalog("g1"), 0, 0},
  };
}

// Quota check by monotonicity: no T of size r-1 inside a copy, together with
// everything outside it, converts. Copy v spans [v*size, (v+1)*size).
bool quota_holds(const Graph& h, int copies, int size, int r, std::string& detail) {
  const int take = std::min(r - 1, size);
  for (int c = 0; c < copies; ++c) {
    VertexSet outside = h.all();
    for (int i = 0; i < size; ++i) outside.erase(c * size + i);
    const bool broken = for_each_subset_of_size(size, take, [&](const std::vector<Vertex>& idx) {
      VertexSet s = outside;
      for (Vertex i : idx) s.insert(c * size + i);
      return is_conversion_set(h, s, 2);
    });
    if (broken) {
      detail = "copy " + std::to_string(c) + " converts with " + std::to_string(take) + " of its vertices";
      return false;
    }
  }
  detail = "every copy needs >= " + std::to_string(r) + " seeds";
  return true;
}

// ------------------------------------------------------------ suites

void suite_dr(Suite& s) {
  int idx = 0;
  for (const auto& e : cubic_corpus(s.limit)) {
    const Graph& g = e.graph;
    Rng rng(1000 + static_cast<std::uint64_t>(idx++));
    for (int k : {3, 2}) {
      int agree = 0, total = 0;
      std::vector<VertexSet> sets{ck_exact(g, k).witness, g.all()};
      for (int i = 0; i < 40; ++i) sets.push_back(random_subset(rng, g.order()));
      for (const auto& set : sets) {
        const auto rep = characterization_check(g, set, k);
        ++total;
        if (rep.complement_rule && *rep.complement_rule == rep.simulated) ++agree;
      }
      s.check(with(e.recipe, "k=" + std::to_string(k)),
              std::string(k == 3 ? "V-S independent" : "G[V-S] forest") + " iff S converts on all " +
                  std::to_string(total) + " sets",
              std::to_string(agree) + "/" + std::to_string(total) + " agree", agree == total);
    }
    s.equal(with(e.recipe, "k=3"), "c_3 vs n - alpha", g.order() - independence_number(g), ck_exact(g, 3).value);
  }
}

void suite_kkk(Suite& s) {
  std::vector<Graph> joins3;
  for (int k = 2; k <= 6; ++k) {
    for (int t = 0; t < k; ++t) {
      for (const auto& name : regular_hosts(t, k)) {
        const Recipe r = recipes::join(recipes::catalog(name), k);
        const Graph g = build(r);
        if (k == 3) joins3.push_back(g);
        const auto res = ck_exact(g, k);
        s.equal(r.to_string(), "order", 2 * k - t, g.order());
        s.holds(r.to_string(), "k-regular", regular_degree(g) == k);
        s.equal(r.to_string(), "c_k", k, res.value);
        bool indep = true;
        for (const auto& m : all_minimum_conversion_sets(g, k)) indep = indep && is_independent(g, m.complement());
        s.holds(r.to_string(), "every minimum set has independent complement", indep);
      }
    }
  }
  // Converse on cubic graphs: c_3 = 3 only for joins.
  for (const auto& e : cubic_corpus(s.limit)) {
    if (ck_exact(e.graph, 3).value != 3) continue;
    bool is_join = false;
    for (const auto& j : joins3) is_join = is_join || are_isomorphic(j, e.graph);
    s.holds(with(e.recipe, "k=3"), "c_3 = 3 implies a join H v K_{3-t}", is_join);
  }
}

void suite_nbound(Suite& s) {
  for (int k = 2; k <= 6; ++k) {
    const Recipe r = recipes::extremal_regular(k);
    const Graph g = build(r);
    s.equal(r.to_string(), "order", 2 * k + 2, g.order());
    s.holds(r.to_string(), "(k+1)-regular", regular_degree(g) == k + 1);
    s.holds(r.to_string(), "seed {0..k-1} converts", is_conversion_set(g, extremal_seed(k), k));
  }
  s.holds(recipes::extremal_regular(3).to_string(), "isomorphic to catalog sharp8",
          are_isomorphic(extremal_regular(3), catalog("sharp8")));
  for (const auto& inst : seed_layer_instances(s.limit))
    s.holds(with(inst.recipe, "k=" + std::to_string(inst.k)), "order <= 2k+2", inst.graph.order() <= 2 * inst.k + 2,
            "order " + std::to_string(inst.graph.order()));
  // k = 2: the only cubic graphs with c_2 = 2.
  int k4 = 0, k33 = 0, prism = 0, other = 0;
  for (const auto& e : cubic_corpus(s.limit)) {
    if (c2(e.graph) != 2) continue;
    if (are_isomorphic(e.graph, catalog("k4"))) ++k4;
    else if (are_isomorphic(e.graph, catalog("k33"))) ++k33;
    else if (are_isomorphic(e.graph, catalog("prism"))) ++prism;
    else ++other;
  }
  s.holds("cubic corpus, k=2", "c_2 = 2 exactly on K4, K3,3, prism", k4 > 0 && k33 > 0 && prism > 0 && other == 0,
          "k4 " + std::to_string(k4) + ", k33 " + std::to_string(k33) + ", prism " + std::to_string(prism) +
              ", other " + std::to_string(other));
}

void suite_nonseedbound(Suite& s) {
  for (const auto& inst : seed_layer_instances(s.limit)) {
    const long long n = inst.graph.order(), k = inst.k;
    bool order_ok = (n - k) * (k - 1) < k * (k + 1) - 1;
    bool y_ok = true;
    int worst_y = 0;
    for (const auto& seed : inst.seeds) {
      auto [s1, y] = layer_sizes(inst.graph, seed, inst.k);
      worst_y = std::max(worst_y, y);
      if (y * (k - 1) > k * (k + 1) + s1 * (1 - k) - 1) y_ok = false;
    }
    const std::string tag = with(inst.recipe, "k=" + std::to_string(k) + ", " + std::to_string(inst.seeds.size()) + " seeds");
    s.holds(tag, "|V - S0| < (k(k+1)-1)/(k-1)", order_ok, "|V-S0| = " + std::to_string(n - k));
    s.holds(tag, "|Y|(k-1) <= k(k+1) + |S1|(1-k) - 1", y_ok, "max |Y| = " + std::to_string(worst_y));
  }
}

void suite_kbound(Suite& s) {
  for (const auto& inst : seed_layer_instances(s.limit)) {
    int worst = 0;
    for (const auto& seed : inst.seeds) worst = std::max(worst, layer_sizes(inst.graph, seed, inst.k).second);
    s.holds(with(inst.recipe, "k=" + std::to_string(inst.k)), "|Y| <= k for every size-k seed", worst <= inst.k,
            "max |Y| = " + std::to_string(worst));
  }
  auto [s1, y] = layer_sizes(catalog("sharp8"), VertexSet(8, {0, 1, 2}), 3);
  s.equal(with(recipes::catalog("sharp8"), "S0={0,1,2} k=3"), "|S1|", 2, s1);
  s.equal(with(recipes::catalog("sharp8"), "S0={0,1,2} k=3"), "|Y| (sharp)", 3, y);
}

void suite_regularlowerbound(Suite& s) {
  std::vector<std::pair<CorpusEntry, int>> cases;
  for (auto& e : cubic_corpus(s.limit)) cases.emplace_back(std::move(e), 2);
  for (auto& e : random_regular_corpus(4, 6, std::min(s.limit, 14), 2, 61)) cases.emplace_back(std::move(e), 3);
  for (auto& e : random_regular_corpus(5, 6, std::min(s.limit, 12), 2, 63)) cases.emplace_back(std::move(e), 4);
  for (const auto& [e, k] : cases) {
    const auto res = ck_exact(e.graph, k);
    const Rational bound = k_plus_one_value(e.graph.order(), k);
    const std::string tag = with(e.recipe, "k=" + std::to_string(k));
    s.check(tag, "c_k >= " + std::to_string(bound.ceil()), "c_k = " + std::to_string(res.value), res.value >= bound.ceil());
    const auto cert = equality_certificate(e.graph, res.witness, k);
    const bool certified = cert.verdict == Equality::MeetsKPlusOneEquality;
    s.check(tag, "certificate iff |S| = " + bound.to_string(),
            std::string(to_string(cert.verdict)) + ", |S| = " + std::to_string(res.value),
            certified == cert.meets_rational_bound);
  }
  const auto k4 = equality_certificate(catalog("k4"), ck_exact(catalog("k4"), 2).witness, 2);
  s.holds(with(recipes::catalog("k4"), "k=2"), "meets ceiled bound 2 but not the rational 3/2",
          k4.meets_ceiled_bound && !k4.meets_rational_bound && k4.verdict == Equality::NoEquality);
}

void suite_immune(Suite& s) {
  std::vector<CorpusEntry> graphs;
  for (int d = 3; d <= 5; ++d)
    for (auto& e : random_regular_corpus(d, d + 1, std::min(s.limit, 14), 2, 70 + static_cast<std::uint64_t>(d)))
      graphs.push_back(std::move(e));
  int idx = 0;
  for (const auto& e : graphs) {
    const int d = *regular_degree(e.graph);
    Rng rng(2000 + static_cast<std::uint64_t>(idx++));
    for (int k = 1; k <= d; ++k) {
      int agree = 0;
      const int trials = 25;
      for (int i = 0; i < trials; ++i) {
        const VertexSet set = random_subset(rng, e.graph.order());
        const auto rep = characterization_check(e.graph, set, k);
        const VertexSet core = residual_core(e.graph, set.complement(), k);
        const bool dual = core.empty() == rep.simulated && (core.empty() || is_k_immune(e.graph, core, k));
        if (rep.complement_rule == rep.simulated && dual) ++agree;
      }
      s.check(with(e.recipe, "k=" + std::to_string(k)),
              "G[V-S] " + std::to_string(d - k) + "-degenerate iff S converts iff no immune set in V-S",
              std::to_string(agree) + "/" + std::to_string(trials) + " agree", agree == trials);
    }
  }
}

void suite_degenerate_edges(Suite& s) {
  Rng rng(77);
  for (int r = 1; r <= 4; ++r) {
    int checked = 0, bad = 0;
    for (int n = r; n <= std::min(s.limit, 14); ++n) {
      for (int rep = 0; rep < 6; ++rep) {
        // rep 0-1: every new vertex takes exactly r back-neighbours (maximal);
        // otherwise a random number in 0..r.
        std::vector<Edge> es;
        const int base = rep < 2 ? r : 0;
        for (Vertex u = 0; u < base && u < n; ++u)
          for (Vertex v = u + 1; v < base && v < n; ++v) es.emplace_back(u, v);
        for (Vertex v = base; v < n; ++v) {
          std::vector<Vertex> earlier(static_cast<std::size_t>(v));
          for (Vertex u = 0; u < v; ++u) earlier[static_cast<std::size_t>(u)] = u;
          rng.shuffle(earlier);
          const int take = rep < 2 ? r : static_cast<int>(rng.below(static_cast<std::uint64_t>(r) + 1));
          for (int i = 0; i < take && i < v; ++i) es.emplace_back(earlier[static_cast<std::size_t>(i)], v);
        }
        const Graph h = Graph::from_edges(n, es);
        const long long ceiling = degenerate_edge_ceiling(n, r);
        const bool maximal = is_maximal_r_degenerate(h, r);
        ++checked;
        if (h.edge_count() > ceiling || (h.edge_count() == ceiling) != maximal || (rep < 2 && !maximal)) ++bad;
      }
    }
    s.check("generated r-degenerate graphs, r=" + std::to_string(r), "m <= rn - C(r+1,2), equality iff maximal",
            std::to_string(checked - bad) + "/" + std::to_string(checked) + " consistent", bad == 0);
  }
  int bad = 0, checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_gnp(4 + i % 11, 0.15 + 0.05 * (i % 10), 5000 + static_cast<std::uint64_t>(i));
    const int d = degeneracy(g);
    ++checked;
    if (g.order() >= d && g.edge_count() > degenerate_edge_ceiling(g.order(), d)) ++bad;
  }
  s.check("random G(n,p), n 4..14", "m <= dn - C(d+1,2) at d = degeneracy",
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " consistent", bad == 0);
}

void suite_kplusr_bound(Suite& s) {
  for (const auto& e : regular_45_corpus(s.limit)) {
    const int d = *regular_degree(e.graph);
    for (int r = 0; 2 * r < d; ++r) {
      const int k = d - r;
      const auto res = ck_exact(e.graph, k);
      const Rational bound = general_value(e.graph.order(), k, r);
      const std::string tag = with(e.recipe, "k=" + std::to_string(k) + " r=" + std::to_string(r));
      s.check(tag, "c_k >= ceil(" + bound.to_string() + ")", "c_k = " + std::to_string(res.value),
              res.value >= bound.ceil());
      const Rational gap = bound - deficit_value(e.graph.order(), k, r);
      s.check(tag, "margin over (k-r)n/(2k) = " + Rational((r + 1) * r, 2 * k).to_string(), gap.to_string(),
              gap == Rational((r + 1) * r, 2 * k) && (r == 0 || gap > Rational(0)));
      if (r >= 1) {
        const auto cert = equality_certificate(e.graph, res.witness, k);
        s.check(tag, "certificate iff |S| = " + bound.to_string(), to_string(cert.verdict),
                (cert.verdict != Equality::NoEquality) == cert.meets_rational_bound);
      }
    }
  }
  bool grid = true;
  for (int k = 1; k <= 8; ++k)
    for (int n = 1; n <= 40; ++n) {
      grid = grid && general_value(n, k, k - 1) >= near_regular_value(n, k);
      grid = grid && general_value(n, k, 0) == Rational(n, 2);
      for (int r = 0; r < k; ++r) grid = grid && general_value(n + 1, k, r) >= general_value(n, k, r);
    }
  s.holds("formula grid k 1..8, n 1..40", "r=k-1 value >= (n+2(k-1))/(2k); r=0 gives n/2; nondecreasing in n", grid);
}

void suite_bridges(Suite& s) {
  for (const auto& e : cubic_corpus(s.limit)) {
    const auto cut = bridges(e.graph);
    if (cut.empty()) continue;
    const int whole = c2(e.graph);
    for (auto [u, v] : cut) {
      const Graph split = e.graph.without_edge(u, v);
      const auto parts = components(split);
      int sum = 0;
      for (const auto& p : parts) sum += ck_exact(split.induced(p), 2).value;
      s.equal(with(e.recipe, "bridge " + std::to_string(u) + "-" + std::to_string(v)), "c_2(H1) + c_2(H2)", whole, sum);
    }
  }
}

void suite_blocks(Suite& s) {
  for (int i = 1; i <= 4; ++i) {
    const auto b = building_block(i);
    const std::string tag = recipes::block(i).to_string();
    s.holds(tag, "pair {" + b.conversion_pair.to_string() + "} converts", is_conversion_set(b.graph, b.conversion_pair, 2));
    s.equal(tag, "c_2", 2, ck_oracle(b.graph, 2).value);
    bool no_universal = true;
    for (Vertex v = 0; v < b.graph.order(); ++v) {
      VertexSet rest = b.graph.all();
      rest.erase(v);
      no_universal = no_universal && !is_acyclic(b.graph, rest);
    }
    s.holds(tag, "no vertex lies on every cycle", no_universal);
    const bool want_tf = i == 2 || i == 3;
    s.holds(tag, want_tf ? "triangle-free" : "has a triangle", is_triangle_free(b.graph) == want_tf);
  }
  for (const auto& e : cubic_corpus(std::min(s.limit, 20))) {
    std::vector<VertexSet> copies;
    for (int i = 1; i <= 4; ++i)
      for (auto& c : induced_copies(e.graph, building_block(i).graph)) copies.push_back(std::move(c));
    if (copies.empty()) continue;
    const auto minimum = all_minimum_conversion_sets(e.graph, 2);
    int bad = 0;
    for (const auto& m : minimum)
      for (const auto& c : copies)
        if (m.intersection_size(c) != 2) ++bad;
    s.check(with(e.recipe, std::to_string(copies.size()) + " block copies"),
            "each of " + std::to_string(minimum.size()) + " minimum sets meets every copy in 2",
            std::to_string(bad) + " violations", bad == 0);
  }
}

void excess_case(Suite& s, const Recipe& r, int m, long long expected_excess, bool want_bridges, ChromaticClass want_class,
                 bool want_triangle_free) {
  const Graph g = build(r);
  const int c = c2(g);
  s.equal(r.to_string(), "c_2", 2 * m, c);
  s.equal(r.to_string(), "c_2 - ceil((n+2)/4)", expected_excess, c - ceil_div(g.order() + 2, 4));
  s.holds(r.to_string(), want_bridges ? "bridged" : "bridgeless", bridges(g).empty() != want_bridges);
  s.holds(r.to_string(), std::string("chromatic ") + to_string(want_class), chromatic_class(g) == want_class);
  s.holds(r.to_string(), want_triangle_free ? "triangle-free" : "has triangles", is_triangle_free(g) == want_triangle_free);
}

void suite_oneconnected(Suite& s) {
  for (int m = 2; 6 * m - 2 <= s.limit; ++m)
    excess_case(s, recipes::path_replace(m, 1), m, m / 2, true, ChromaticClass::Class2, false);
}

void suite_noyesyes(Suite& s) {
  for (int m = 2; 6 * m + 2 <= s.limit; ++m)
    excess_case(s, recipes::path_replace(m, 3), m, m / 2 - 1, true, ChromaticClass::Class2, true);
}

void suite_yesnono(Suite& s) {
  for (int m = 3; 6 * m <= s.limit; ++m) {
    excess_case(s, recipes::cycle_replace(m, 4), m, (m - 1) / 2, false, ChromaticClass::Class1, false);
    excess_case(s, recipes::cycle_replace(m, 2), m, (m - 1) / 2, false, ChromaticClass::Class1, true);
  }
}

std::vector<Recipe> triangle_bases() {
  std::vector<Recipe> out;
  for (const char* n : {"k4", "k33", "prism", "q3", "petersen", "heawood"}) out.push_back(recipes::catalog(n));
  out.push_back(recipes::path_replace(2, 1));
  out.push_back(recipes::path_replace(2, 3));
  return out;
}

void suite_triangle_class(Suite& s) {
  for (const auto& base : triangle_bases()) {
    const Graph g = build(base);
    const Recipe r = recipes::triangle_replace(base);
    const Graph t = build(r);
    s.equal(r.to_string(), "order", 3 * g.order(), t.order());
    s.equal(r.to_string(), "bridges", static_cast<long long>(bridges(g).size()), static_cast<long long>(bridges(t).size()));
    s.check(r.to_string(), std::string("class ") + to_string(chromatic_class(g)), to_string(chromatic_class(t)),
            chromatic_class(g) == chromatic_class(t));
    s.equal(r.to_string(), "girth", 3, girth(t).value_or(0));
  }
}

void suite_disjoint_cycles(Suite& s) {
  std::vector<std::pair<CorpusEntry, int>> cases;
  for (auto& e : cubic_corpus(s.limit)) cases.emplace_back(std::move(e), 2);
  for (auto& e : random_regular_corpus(4, 6, std::min(s.limit, 14), 2, 81)) cases.emplace_back(std::move(e), 3);
  for (const auto& [e, k] : cases) {
    const auto d = disjoint_cycle_packing(e.graph, e.graph.all()).size();
    const int c = ck_exact(e.graph, k).value;
    s.check(with(e.recipe, "k=" + std::to_string(k)), "c_k >= d = " + std::to_string(d), "c_k = " + std::to_string(c),
            c >= static_cast<int>(d));
  }
}

void suite_triangles_bound(Suite& s) {
  for (const auto& base : triangle_bases()) {
    const Graph g = build(base);
    const Recipe r = recipes::triangle_replace(base);
    const Graph t = build(r);
    const int m = g.order();
    const auto packing = static_cast<int>(disjoint_cycle_packing(t, t.all()).size());
    s.check(r.to_string(), "disjoint cycles >= " + std::to_string(m), std::to_string(packing), packing >= m);
    const bool exact = t.order() <= s.limit;
    const int lower = exact ? c2(t) : packing;
    const long long excess = lower - ceil_div(t.order() + 2, 4);
    s.check(r.to_string(), "excess >= " + std::to_string((m - 2) / 4),
            std::string(exact ? "exact " : "bound-only ") + std::to_string(excess), excess >= (m - 2) / 4);
  }
  const Recipe tk4 = recipes::triangle_replace(recipes::catalog("k4"));
  const Graph t = build(tk4);
  const auto minimum = all_minimum_conversion_sets(t, 2);
  s.equal(tk4.to_string(), "c_2", 4, minimum.empty() ? -1 : minimum.front().size());
  int bad = 0;
  for (const auto& mset : minimum)
    for (Vertex v = 0; v < 4; ++v)
      if (mset.intersection_size(VertexSet(12, {3 * v, 3 * v + 1, 3 * v + 2})) != 1) ++bad;
  s.check(tk4.to_string(), "every minimum set meets each triangle once", std::to_string(bad) + " violations", bad == 0);
}

void suite_atleastr(Suite& s) {
  for (const auto& p : product_cases()) {
    const Graph a = build(p.a);
    if (a.order() % 4 != 0 || !is_cubic(a)) continue;
    const Graph g = build(p.g);
    const Recipe r = product_recipe(p);
    const Graph h = build(r);
    std::string detail;
    const bool ok = quota_holds(h, g.order(), a.order() - 1, a.order() / 4, detail);
    s.holds(r.to_string(), ">= r = " + std::to_string(a.order() / 4) + " seeds in every copy of A-a", ok, detail);
  }
}

void suite_product_exceeds(Suite& s) {
  for (const auto& p : product_cases()) {
    const Graph a = build(p.a);
    if (a.order() % 4 != 0) continue;
    const Graph g = build(p.g);
    const Recipe r = product_recipe(p);
    const Graph h = build(r);
    const int rr = a.order() / 4;
    const int n = g.order();
    const bool exact = h.order() <= s.limit;
    std::string detail;
    const bool quota = quota_holds(h, n, a.order() - 1, rr, detail);
    const int lower = exact ? c2(h) : n * rr;
    const long long excess = lower - ceil_div(h.order() + 2, 4);
    s.check(r.to_string(), "c_2 >= nr = " + std::to_string(n * rr),
            std::string(exact ? "c_2 = " : "quota gives >= ") + std::to_string(lower), (exact || quota) && lower >= n * rr);
    s.check(r.to_string(), "excess >= " + std::to_string((n - 2) / 4), std::to_string(excess), excess >= (n - 2) / 4);
  }
  const Recipe k4g1 = recipes::product(recipes::catalog("k4"), recipes::catalog("g1"), 0);
  if (28 <= s.limit) s.equal(k4g1.to_string(), "c_2 (ratio 2/7)", 8, c2(build(k4g1)));
}

void suite_product_girth(Suite& s) {
  for (const auto& p : product_cases()) {
    const Recipe r = product_recipe(p);
    const int ga = girth(build(p.a)).value_or(0);
    const int gh = girth(build(r)).value_or(0);
    s.check(r.to_string(), "girth >= " + std::to_string(ga), std::to_string(gh), gh >= ga);
  }
}

void suite_product_3conn(Suite& s) {
  for (const auto& p : product_cases()) {
    if (!is_k_connected(build(p.g), 3) || !is_k_connected(build(p.a), 3)) continue;
    const Recipe r = product_recipe(p);
    s.holds(r.to_string(), "3-connected", is_k_connected(build(r), 3));
  }
}

void suite_product_chromatic(Suite& s) {
  using recipes::catalog;
  const std::vector<ProductCase> cases = {
      {catalog("k4"), catalog("g1"), 0, 0},
      {catalog("k4"), catalog("petersen"), 0, 0},
      {catalog("petersen"), catalog("k4"), 0, 0},
      {recipes::path_replace(2, 1), catalog("k4"), 0, 0},
      {recipes::path_replace(2, 1), catalog("petersen"), 0, 0},
      {catalog("k33"), catalog("cubic12"), 11, 0},
  };
  for (const auto& p : cases) {
    const auto cg = chromatic_class(build(p.g)), ca = chromatic_class(build(p.a));
    const Recipe r = product_recipe(p);
    const auto ch = chromatic_class(build(r));
    const auto want = cg == ChromaticClass::Class1 && ca == ChromaticClass::Class1 ? ChromaticClass::Class1
                                                                                   : ChromaticClass::Class2;
    s.check(r.to_string(), std::string(to_string(cg)) + " x " + to_string(ca) + " -> " + to_string(want),
            to_string(ch), ch == want);
  }
}

void suite_two_colours(Suite& s) {
  for (const Recipe& r : {recipes::catalog("petersen"), recipes::catalog("j5"), recipes::path_replace(2, 1),
                          recipes::path_replace(2, 3)}) {
    const Graph g = build(r);
    if (chromatic_class(g) != ChromaticClass::Class2) {
      s.holds(r.to_string(), "Class 2 input", false);
      continue;
    }
    int edge_bad = 0, vertex_bad = 0;
    for (auto [u, v] : g.edges())
      if (is_3_edge_colourable(g.without_edge(u, v))) ++edge_bad;
    for (Vertex v = 0; v < g.order(); ++v) {
      VertexSet drop(g.order(), {v});
      if (is_3_edge_colourable(g.without_vertices(drop))) ++vertex_bad;
    }
    s.check(r.to_string(), "no colour class of size 1 (G-e never 3-edge-colourable)",
            std::to_string(edge_bad) + " edges fail", edge_bad == 0);
    s.check(r.to_string(), "G-v Class 2 for every v", std::to_string(vertex_bad) + " vertices fail", vertex_bad == 0);
  }
}

void suite_getorder4r(Suite& s) {
  struct Base {
    const char* name;
    int girth;
  };
  for (const Base b : {Base{"petersen", 5}, Base{"heawood", 6}}) {
    const Graph base = catalog(b.name);
    for (auto [u, v] : base.edges()) {
      const Recipe r = recipes::doubled_block(recipes::catalog(b.name), u, v);
      const Graph a = build(r);
      s.equal(r.to_string(), "order", 2 * (base.order() - 2), a.order());
      s.equal(r.to_string(), "order mod 4", 0, a.order() % 4);
      s.check(r.to_string(), "girth >= " + std::to_string(b.girth), std::to_string(girth(a).value_or(0)),
              girth(a).value_or(0) >= b.girth);
      s.holds(r.to_string(), "cubic and 3-connected", is_cubic(a) && is_k_connected(a, 3));
      if (std::string(b.name) == "heawood") break;
    }
  }
}

void suite_4conn(Suite& s) {
  for (const auto& e : cubic_corpus(s.limit)) {
    if (!cyclic_edge_connectivity_at_least(e.graph, 4)) continue;
    s.equal(e.recipe.to_string(), "c_2 = ceil((n+2)/4)", ceil_div(e.graph.order() + 2, 4), c2(e.graph));
  }
}

void suite_cubic_upper(Suite& s) {
  for (const auto& e : cubic_corpus(s.limit)) {
    const Graph& g = e.graph;
    if (g.order() <= 4) continue;
    const long long n = g.order();
    const int c = c2(g);
    const auto ub = upper_bounds_cubic(g);
    const std::string tag = e.recipe.to_string();
    if (const auto* x = ub.find("calG-exact"))
      s.check(tag, "c_2 = (3n+2)/8 = " + x->value.to_string(), std::to_string(c), Rational(c) == x->value);
    else
      s.check(tag, "c_2 <= 3n/8 = " + Rational(3 * n, 8).to_string(), std::to_string(c), Rational(c) <= Rational(3 * n, 8));
    const auto* tf = ub.find("triangle-free-n/3");
    if (tf->applicable) s.check(tag, "c_2 <= n/3", std::to_string(c), Rational(c) <= tf->value);
    if (is_triangle_free(g) && is_exceptional_order8(g))
      s.check(tag, "order-8 exception exceeds n/3", std::to_string(c), Rational(c) > Rational(n, 3));
    const auto* two = ub.find("2-connected");
    if (two->applicable) s.check(tag, "c_2 <= (n+2)/3", std::to_string(c), Rational(c) <= two->value);
  }
}

struct SuiteDef {
  SuiteInfo info;
  std::function<void(Suite&)> run;
};

const std::vector<SuiteDef>& suite_table() {
  static const std::vector<SuiteDef> table = {
      {{"prop-dr", "k-regular: S converts iff V-S independent; (k+1)-regular: iff G[V-S] is a forest", 22}, suite_dr},
      {{"prop-kkk", "k-regular G has c_k = k iff G = H v complement(K_{k-t}) with H t-regular of order k", 22}, suite_kkk},
      {{"prop-nonseedbound", "size-k seed in (k+1)-regular G: |V-S0| < (k(k+1)-1)/(k-1), plus the |Y| layer bound", 22},
       suite_nonseedbound},
      {{"prop-nbound", "(k+1)-regular with a size-k k-conversion set has order <= 2k+2, attained for every k >= 2", 22},
       suite_nbound},
      {{"prop-kbound", "(k+1)-regular with a size-k k-conversion set: |union of S_t, t >= 2| <= k", 22}, suite_kbound},
      {{"prop-regularlowerbound", "(k+1)-regular: c_k >= ceil((n(k-1)+2)/(2k)), equality iff S independent and G-S a tree", 22},
       suite_regularlowerbound},
      {{"prop-kplusrimmunesets", "(k+r)-regular: S converts iff G[V-S] r-degenerate iff V-S has no k-immune set", 14},
       suite_immune},
      {{"lemma-degenerateedgecount", "r-degenerate on n >= r vertices: m <= rn - C(r+1,2), equality iff maximal", 14},
       suite_degenerate_edges},
      {{"prop-kplusrreglowerbound", "(k+r)-regular, 0 <= r < k: c_k >= ((k-r)n+(r+1)r)/(2k)", 16}, suite_kplusr_bound},
      {{"lemma-bridges", "bridge e of cubic G: c_2(G) = c_2(H1) + c_2(H2)", 22}, suite_bridges},
      {{"lemma-buildingblocks", "minimum 2-conversion sets meet every induced H_i copy in exactly 2 vertices", 20},
       suite_blocks},
      {{"prop-oneconnected", "path of blocks with H1 leaves: bridged, Class 2, excess floor(m/2)", 22}, suite_oneconnected},
      {{"prop-noyesyes", "path of blocks with H3 leaves: bridged, Class 2, triangle-free, excess floor(m/2)-1", 22},
       suite_noyesyes},
      {{"prop-yesnono", "cycle of H4 / H2 blocks: bridgeless, Class 1, excess floor((m-1)/2)", 24}, suite_yesnono},
      {{"lemma-triangle-class2", "G and T(G) have the same number of bridges and the same chromatic index", 0},
       suite_triangle_class},
      {{"lemma-disjointcycles", "(k+1)-regular with d disjoint cycles: c_k >= d", 22}, suite_disjoint_cycles},
      {{"prop-trianglesdontmeetbound", "T(H), H cubic of order m: c_2 - ceil((3m+2)/4) >= floor((m-2)/4)", 18},
       suite_triangles_bound},
      {{"lemma-atleastr", "A cubic of order 4r: every 2-conversion set has >= r vertices in each copy of A-a", 0},
       suite_atleastr},
      {{"prop-product-exceeds", "A of order 4r: c_2(G o A-) - ceil((|V|+2)/4) >= floor((n-2)/4)", 28},
       suite_product_exceeds},
      {{"prop-product-girth", "G o A- has girth >= g(A)", 0}, suite_product_girth},
      {{"prop-product-3conn", "G o A- is 3-connected when G and A are", 0}, suite_product_3conn},
      {{"prop-product-chromatic", "G o A- is Class 1 iff G and A are Class 1", 0}, suite_product_chromatic},
      {{"lemma-two-of-each-colour", "cubic Class 2: every 4-edge-colouring uses each colour twice; H-v stays Class 2", 0},
       suite_two_colours},
      {{"thm-getorder4r", "doubled block of a 3-connected cubic B of girth g: order 2(n-2), girth >= g, 3-connected", 0},
       suite_getorder4r},
      {{"thm-4conn", "cyclically 4-edge-connected cubic: c_2 = ceil((n+2)/4)", 22}, suite_4conn},
      {{"thm-cubicupper", "cubic n > 4: class member c_2 = (3n+2)/8 else <= 3n/8; triangle-free <= n/3; 2-connected <= (n+2)/3", 18},
       suite_cubic_upper},
  };
  return table;
}

}  // namespace

bool VerificationOutcome::pass() const { return failures() == 0; }

int VerificationOutcome::failures() const {
  return static_cast<int>(std::count_if(instances.begin(), instances.end(), [](const auto& i) { return !i.pass; }));
}

const std::vector<SuiteInfo>& verification_suites() {
  static const std::vector<SuiteInfo> list = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : suite_table()) out.push_back(d.info);
    return out;
  }();
  return list;
}

VerificationOutcome verify_proposition(const std::string& id, int size_limit) {
  for (const auto& d : suite_table()) {
    if (d.info.id != id) continue;
    const auto start = Clock::now();
    Suite s(size_limit > 0 ? size_limit : d.info.default_size_limit);
    d.run(s);
    VerificationOutcome out;
    out.id = id;
    out.statement = d.info.statement;
    out.size_limit = s.limit;
    out.instances = std::move(s.instances);
    out.runtime = Clock::now() - start;
    return out;
  }
  throw PreconditionError("unknown verification suite '" + id + "'");
}

std::vector<VerificationOutcome> verify_all(int size_limit, int threads) {
  const auto& suites = verification_suites();
  std::vector<VerificationOutcome> results(suites.size());
  std::vector<std::string> errors(suites.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suites.size(); i = next++) {
      try {
        results[i] = verify_proposition(suites[i].id, size_limit);
      } catch (const std::exception& e) {
        results[i].id = suites[i].id;
        results[i].statement = suites[i].statement;
        results[i].instances.push_back({"(suite)", "completes", std::string("error: ") + e.what(), false});
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads > 0 ? threads : default_thread_count(), static_cast<int>(suites.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int default_thread_count() {
  if (const char* env = std::getenv("CONVLAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CorpusEntry> cubic_corpus(int max_order) {
  std::vector<Recipe> list;
  for (const auto& name : cubic_catalog_names()) list.push_back(recipes::catalog(name));
  for (int m = 2; m <= 4; ++m) list.push_back(recipes::path_replace(m, 1));
  for (int m = 2; m <= 3; ++m) list.push_back(recipes::path_replace(m, 3));
  for (int b : {2, 4}) list.push_back(recipes::cycle_replace(3, b));
  for (const char* n : {"k4", "k33", "prism"}) list.push_back(recipes::triangle_replace(recipes::catalog(n)));
  list.push_back(recipes::calG_member(recipes::catalog("path-2")));
  list.push_back(recipes::calG_member(recipes::catalog("star-3")));
  list.push_back(recipes::doubled_block(recipes::catalog("petersen"), 0, 1));
  for (int n = 8; n <= 22; n += 2)
    for (std::uint64_t seed = 1; seed <= 2; ++seed) list.push_back(recipes::random_regular(n, 3, 100 * n + seed));
  std::vector<CorpusEntry> out;
  for (const auto& r : list) {
    Graph g = build(r);
    if (g.order() <= max_order) out.push_back({r, std::move(g)});
  }
  return out;
}

std::vector<CorpusEntry> random_regular_corpus(int d, int n_min, int n_max, int per_order, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  for (int n = std::max(n_min, d + 1); n <= n_max; ++n) {
    if ((n * d) % 2 != 0) continue;
    for (int i = 0; i < per_order; ++i) {
      const Recipe r = recipes::random_regular(n, d, seed * 1000 + static_cast<std::uint64_t>(n * 10 + i));
      out.push_back(make(r));
    }
  }
  return out;
}

}  // namespace convlab
