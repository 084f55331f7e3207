// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "convlab/bounds.hpp"
#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/conversion.hpp"
#include "convlab/degeneracy.hpp"
#include "convlab/isomorphism.hpp"
#include "convlab/random.hpp"
#include "convlab/rational.hpp"
#include "convlab/solver.hpp"
#include "convlab/structure.hpp"
#include "convlab/verify.hpp"

using namespace convlab;

namespace {

// Collects the first few failure messages of one criterion.
class Ledger {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 5) failures_.push_back(what);
    ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n      " + f;
    return s;
  }

 private:
  int checks_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
};

long long ceil_div(long long a, long long b) { return Rational(a, b).ceil(); }

std::string name_of(const Recipe& r) { return r.to_string(); }

void criterion_named_c2(Ledger& l) {
  struct Row {
    const char* name;
    int c2;
  };
  for (const Row r : {Row{"k4", 2}, Row{"k33", 2}, Row{"prism", 2}, Row{"petersen", 3}, Row{"q3", 3},
                      Row{"dodecahedron", 6}, Row{"j5", 6}}) {
    const Graph g = catalog(r.name);
    const auto bnb = ck_exact(g, 2);
    const auto oracle = ck_oracle(g, 2);
    l.expect(bnb.value == r.c2, std::string(r.name) + ": branch-and-bound gave " + std::to_string(bnb.value));
    l.expect(oracle.value == r.c2, std::string(r.name) + ": oracle gave " + std::to_string(oracle.value));
    l.expect(bnb.witness == oracle.witness, std::string(r.name) + ": witnesses differ");
    l.expect(is_conversion_set(g, bnb.witness, 2), std::string(r.name) + ": witness does not convert");
  }
}

void criterion_joins(Ledger& l) {
  // t-regular catalog graphs on k vertices, t < k.
  auto hosts = [](int t, int k) {
    std::vector<std::string> out;
    if ((t * k) % 2) return out;
    if (t == 0) out.push_back("empty-" + std::to_string(k));
    if (t == 1) out.push_back("matching-" + std::to_string(k));
    if (t == 2 && k >= 3) out.push_back("cycle-" + std::to_string(k));
    if (t == 3 && k == 6) out = {"k33", "prism"};
    if (t == 4 && k == 6) out.push_back("octahedron");
    if (t == k - 1 && out.empty()) out.push_back("complete-" + std::to_string(k));
    return out;
  };
  int built = 0;
  for (int k = 2; k <= 6; ++k)
    for (int t = 0; t < k; ++t)
      for (const auto& h : hosts(t, k)) {
        const Graph g = join_with_empty(catalog(h), k);
        const std::string tag = h + " v empty(" + std::to_string(k - t) + ")";
        ++built;
        l.expect(regular_degree(g) == k, tag + ": not k-regular");
        l.expect(ck_exact(g, k).value == k, tag + ": c_k != k");
        for (const auto& s : all_minimum_conversion_sets(g, k))
          l.expect(is_independent(g, s.complement()), tag + ": minimum set {" + s.to_string() + "} has dependent complement");
      }
  l.expect(built >= 14, "only " + std::to_string(built) + " joins built");
}

void criterion_extremal(Ledger& l) {
  for (int k = 2; k <= 6; ++k) {
    const Graph g = extremal_regular(k);
    const VertexSet seed = extremal_seed(k);
    const std::string tag = "extremal k=" + std::to_string(k);
    l.expect(g.order() == 2 * k + 2, tag + ": order " + std::to_string(g.order()));
    l.expect(regular_degree(g) == k + 1, tag + ": not (k+1)-regular");
    const auto tr = run_process(g, seed, k);
    l.expect(seed.size() == k && tr.complete, tag + ": seed does not convert");
    const long long n = g.order(), kk = k;
    const long long s1 = tr.layers.size() > 1 ? tr.layers[1].size() : 0;
    const long long y = tr.converted_from(2).size();
    l.expect((n - kk) * (kk - 1) < kk * (kk + 1) - 1, tag + ": |V-S0| bound fails");
    l.expect(y * (kk - 1) <= kk * (kk + 1) + s1 * (1 - kk) - 1, tag + ": |Y| layer bound fails");
    l.expect(y <= kk, tag + ": |Y| = " + std::to_string(y) + " > k");
  }
  l.expect(are_isomorphic(extremal_regular(3), catalog("sharp8")), "extremal k=3 not isomorphic to sharp8");
}

void criterion_cubic_lower(Ledger& l) {
  int attained = 0;
  for (const auto& e : cubic_corpus(22)) {
    const Graph& g = e.graph;
    const auto res = ck_exact(g, 2);
    const long long n = g.order();
    l.expect(res.value >= ceil_div(n + 2, 4), name_of(e.recipe) + ": below ceil((n+2)/4)");
    if (Rational(res.value) == Rational(n + 2, 4)) {
      ++attained;
      l.expect(is_independent(g, res.witness), name_of(e.recipe) + ": tight but witness not independent");
      l.expect(is_tree(g.without_vertices(res.witness)), name_of(e.recipe) + ": tight but G-S not a tree");
    }
  }
  l.expect(attained > 0, "no corpus graph attains the rational bound");
}

void criterion_kplusr(Ledger& l) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (const char* n : {"octahedron", "complete-5", "sharp8", "complete-6"}) graphs.emplace_back(n, catalog(n));
  graphs.emplace_back("extremal(3)", extremal_regular(3));
  graphs.emplace_back("extremal(4)", extremal_regular(4));
  for (int d : {4, 5})
    for (const auto& e : random_regular_corpus(d, d + 2, 16, 2, 500 + static_cast<std::uint64_t>(d)))
      graphs.emplace_back(e.recipe.to_string(), e.graph);
  for (const auto& [tag, g] : graphs) {
    const int d = *regular_degree(g);
    for (int r = 0; 2 * r < d; ++r) {
      const int k = d - r;
      const Rational bound = general_value(g.order(), k, r);
      const int c = ck_exact(g, k).value;
      l.expect(c >= bound.ceil(), tag + " k=" + std::to_string(k) + ": c_k " + std::to_string(c) + " below bound");
      if (r >= 1) l.expect(bound > deficit_value(g.order(), k, r), tag + ": no strict dominance at r=" + std::to_string(r));
    }
  }
}

void criterion_excess(Ledger& l) {
  struct Case {
    Graph g;
    int m;
    long long excess;
    std::string tag;
  };
  std::vector<Case> cases;
  for (int m = 2; m <= 3; ++m) {
    cases.push_back({path_replacement(m, 1), m, m / 2, "path H1 m=" + std::to_string(m)});
    cases.push_back({path_replacement(m, 3), m, m / 2 - 1, "path H3 m=" + std::to_string(m)});
  }
  for (int b : {4, 2}) cases.push_back({cycle_replacement(3, b), 3, 1, "cycle H" + std::to_string(b) + " m=3"});
  for (const auto& c : cases) {
    l.expect(c.g.order() <= 20, c.tag + ": order above 20");
    const int v = ck_exact(c.g, 2).value;
    l.expect(v == 2 * c.m, c.tag + ": c_2 = " + std::to_string(v));
    l.expect(v - ceil_div(c.g.order() + 2, 4) == c.excess, c.tag + ": wrong excess");
  }
}

void criterion_triangles(Ledger& l) {
  const Graph t = triangle_replace(catalog("petersen"));
  l.expect(t.order() == 30, "T(Petersen) order");
  l.expect(bridges(t).empty(), "T(Petersen) has bridges");
  l.expect(chromatic_class(t) == ChromaticClass::Class2, "T(Petersen) not Class 2");
  const auto packing = static_cast<long long>(disjoint_cycle_packing(t, t.all()).size());
  l.expect(packing >= 10, "T(Petersen) packing " + std::to_string(packing));
  l.expect(packing - ceil_div(32, 4) >= 2, "T(Petersen) excess below 2");

  const Graph tk4 = triangle_replace(catalog("k4"));
  const auto res = ck_exact(tk4, 2);
  l.expect(res.value == 4, "c_2(T(K4)) = " + std::to_string(res.value));
  for (const auto& s : all_minimum_conversion_sets(tk4, 2))
    for (Vertex v = 0; v < 4; ++v)
      l.expect(s.intersection_size(VertexSet(12, {3 * v, 3 * v + 1, 3 * v + 2})) == 1,
               "T(K4) minimum set {" + s.to_string() + "} misses the one-per-triangle quota");
}

void criterion_products(Ledger& l) {
  const Graph h = product_GA(catalog("k4"), catalog("g1"), 0);
  l.expect(h.order() == 28 && is_cubic(h), "K4 o G1- not cubic of order 28");
  l.expect(is_k_connected(h, 3), "K4 o G1- not 3-connected");
  l.expect(girth(h).value_or(0) >= 4, "K4 o G1- girth below 4");
  l.expect(ck_exact(h, 2).value == 8, "c_2(K4 o G1-) != 8");

  struct Pair {
    Graph g, a;
    std::string tag;
  };
  const std::vector<Pair> pairs = {
      {catalog("k4"), catalog("g1"), "K4 o G1-"},
      {catalog("k4"), catalog("petersen"), "K4 o Petersen-"},
      {catalog("petersen"), catalog("k4"), "Petersen o K4-"},
      {path_replacement(2, 1), catalog("petersen"), "P2(H1) o Petersen-"},
  };
  int class2_inputs = 0;
  for (const auto& p : pairs) {
    const bool both = chromatic_class(p.g) == ChromaticClass::Class1 && chromatic_class(p.a) == ChromaticClass::Class1;
    class2_inputs += both ? 0 : 1;
    const bool out = chromatic_class(product_GA(p.g, p.a, 0)) == ChromaticClass::Class1;
    l.expect(out == both, p.tag + ": chromatic class law fails");
  }
  l.expect(class2_inputs == 3, "pairs do not cover all class combinations");

  // Bound-only order-66 instance: no T with |T| = 2 inside a copy of
  // cubic12 - a converts together with everything outside it, so each
  // copy costs at least 3 seeds.
  const Graph big = product_GA(catalog("k33"), catalog("cubic12"), 11);
  l.expect(big.order() == 66, "K33 o cubic12- order");
  bool quota = true;
  for (int c = 0; c < 6 && quota; ++c) {
    VertexSet outside = big.all();
    for (int i = 0; i < 11; ++i) outside.erase(11 * c + i);
    quota = !for_each_subset_of_size(11, 2, [&](const std::vector<Vertex>& idx) {
      VertexSet s = outside;
      for (Vertex i : idx) s.insert(11 * c + i);
      return is_conversion_set(big, s, 2);
    });
  }
  l.expect(quota, "K33 o cubic12-: some copy converts with 2 seeds");
  l.expect(6 * 3 - ceil_div(68, 4) >= 1, "K33 o cubic12-: excess below 1");
}

void criterion_doubled(Ledger& l) {
  const Graph pet = catalog("petersen");
  for (auto [u, v] : pet.edges()) {
    const Graph a = doubled_block(pet, u, v);
    const std::string tag = "edge " + std::to_string(u) + "-" + std::to_string(v);
    l.expect(a.order() == 16, tag + ": order");
    l.expect(girth(a).value_or(0) >= 5, tag + ": girth");
    l.expect(is_k_connected(a, 3), tag + ": not 3-connected");
  }
}

void criterion_upper(Ledger& l) {
  l.expect(ck_exact(calG_member(catalog("path-2")), 2).value == 4, "c_2 of the order-10 member != 4");
  l.expect(ck_exact(calG_member(catalog("star-3")), 2).value == 7, "c_2 of the order-18 member != 7");
  for (const auto& e : cubic_corpus(18)) {
    const Graph& g = e.graph;
    const long long n = g.order();
    if (n <= 4) continue;
    const Rational c(ck_exact(g, 2).value);
    const std::string tag = name_of(e.recipe);
    if (in_class_calG(g)) l.expect(c == Rational(3 * n + 2, 8), tag + ": class member off (3n+2)/8");
    else l.expect(c <= Rational(3 * n, 8), tag + ": above 3n/8");
    if (is_triangle_free(g) && !is_exceptional_order8(g)) l.expect(c <= Rational(n, 3), tag + ": above n/3");
    if (is_k_connected(g, 2)) l.expect(c <= Rational(n + 2, 3), tag + ": above (n+2)/3");
  }
}

void criterion_properties(Ledger& l) {
  Rng rng(20261014);
  auto random_set = [&](int n) {
    VertexSet s(n);
    const double p = rng.unit();
    for (Vertex v = 0; v < n; ++v)
      if (rng.chance(p)) s.insert(v);
    return s;
  };
  // Monotonicity of the closure.
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_gnp(16, 0.25, 10'000 + static_cast<std::uint64_t>(i));
    const int k = 1 + static_cast<int>(rng.below(3));
    VertexSet s = random_set(16), t = s;
    t |= random_set(16);
    l.expect(conversion_closure(g, s, k).is_subset_of(conversion_closure(g, t, k)), "monotonicity");
  }
  // Characterization and immune-set duality on 500 random regular graphs.
  std::vector<std::pair<int, int>> shapes;
  for (int d = 3; d <= 5; ++d)
    for (int n = d + 1; n <= 14; ++n)
      if ((n * d) % 2 == 0) shapes.emplace_back(n, d);
  for (int i = 0; i < 500; ++i) {
    auto [n, d] = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const Graph g = random_regular(n, d, 20'000 + static_cast<std::uint64_t>(i));
    for (int k = 1; k <= d; ++k) {
      const VertexSet s = random_set(n);
      const auto rep = characterization_check(g, s, k);
      l.expect(rep.complement_rule && *rep.complement_rule == rep.simulated, "characterization disagrees");
      const VertexSet core = residual_core(g, s.complement(), k);
      l.expect(core.empty() == rep.simulated, "immune core vs conversion");
      if (!core.empty()) l.expect(is_k_immune(g, core, k), "residual core not immune");
    }
  }
  // Edge count of r-degenerate graphs.
  for (int i = 0; i < 300; ++i) {
    const int r = 1 + static_cast<int>(rng.below(4));
    const int n = r + static_cast<int>(rng.below(12));
    const bool maximal = i % 2 == 0;
    std::vector<Edge> es;
    for (Vertex u = 0; u < r; ++u)
      for (Vertex v = u + 1; v < r; ++v) es.emplace_back(u, v);
    for (Vertex v = r; v < n; ++v) {
      std::vector<Vertex> earlier(static_cast<std::size_t>(v));
      for (Vertex u = 0; u < v; ++u) earlier[static_cast<std::size_t>(u)] = u;
      rng.shuffle(earlier);
      const int take = maximal ? r : static_cast<int>(rng.below(static_cast<std::uint64_t>(r) + 1));
      for (int j = 0; j < take; ++j) es.emplace_back(earlier[static_cast<std::size_t>(j)], v);
    }
    const Graph h = Graph::from_edges(n, es);
    const long long ceiling = degenerate_edge_ceiling(n, r);
    l.expect(h.edge_count() <= ceiling, "edge count above ceiling");
    l.expect((h.edge_count() == ceiling) == is_maximal_r_degenerate(h, r), "equality vs maximality");
    if (maximal) l.expect(h.edge_count() == ceiling, "generated maximal graph below ceiling");
  }
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<void(Ledger&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "c_2 on named graphs, oracle vs branch-and-bound", 10, criterion_named_c2},
      {2, "joins H v empty(k-t): k-regular, c_k = k, independent complements", 30, criterion_joins},
      {3, "extremal (k+1)-regular graphs of order 2k+2 and their layer bounds", 5, criterion_extremal},
      {4, "cubic corpus n <= 22: c_2 >= ceil((n+2)/4), tight witnesses certified", 120, criterion_cubic_lower},
      {5, "4- and 5-regular n <= 16: (k+r) bound, strict dominance for r >= 1", 120, criterion_kplusr},
      {6, "block paths and cycles: c_2 = 2m and exact excess", 120, criterion_excess},
      {7, "triangle replacement: T(Petersen) bounds, T(K4) exact", 60, criterion_triangles},
      {8, "products: K4 o G1- exact, chromatic law, order-66 quota bound", 600, criterion_products},
      {9, "doubled Petersen blocks: order 16, girth >= 5, 3-connected", 10, criterion_doubled},
      {10, "cubic upper bounds and the tree-built family, n <= 18", 300, criterion_upper},
      {11, "property suites: monotonicity, characterization, immunity, edge bound", 120, criterion_properties},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Ledger l;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(l);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = l.ok() && error.empty() && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.budget_s);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << l.checks()
              << " checks, " << timing << ")";
    if (!error.empty()) std::cout << "\n      error: " << error;
    if (!in_time) std::cout << "\n      over time budget";
    std::cout << l.summary() << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
