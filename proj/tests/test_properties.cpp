#include <doctest.h>

#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/conversion.hpp"
#include "convlab/degeneracy.hpp"
#include "convlab/random.hpp"
#include "convlab/solver.hpp"
#include "convlab/structure.hpp"
#include "convlab/verify.hpp"

using namespace convlab;

namespace {

VertexSet random_subset(Rng& rng, int n, double p) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng.chance(p)) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("closure is idempotent and monotone") {
  Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_gnp(18, 0.2, 50 + static_cast<std::uint64_t>(trial));
    const int k = 1 + static_cast<int>(rng.below(3));
    const VertexSet s = random_subset(rng, 18, 0.3);
    const VertexSet c = conversion_closure(g, s, k);
    CHECK(s.is_subset_of(c));
    CHECK(conversion_closure(g, c, k) == c);
    VertexSet bigger = s;
    bigger |= random_subset(rng, 18, 0.2);
    CHECK(c.is_subset_of(conversion_closure(g, bigger, k)));
    CHECK(conversion_closure(g, s, k + 1).is_subset_of(c));
  }
}

TEST_CASE("unconverted vertices form an immune set") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_gnp(16, 0.25, 700 + static_cast<std::uint64_t>(trial));
    const int k = 1 + static_cast<int>(rng.below(3));
    const VertexSet s = random_subset(rng, 16, 0.3);
    const VertexSet rest = conversion_closure(g, s, k).complement();
    if (!rest.empty()) CHECK(is_k_immune(g, rest, k));
    CHECK(residual_core(g, s.complement(), k) == rest);
  }
}

TEST_CASE("characterization on random regular graphs, every valid k") {
  Rng rng(11);
  int graphs = 0;
  for (int d = 3; d <= 5; ++d) {
    for (int n = d + 1; n <= 14; ++n) {
      if ((n * d) % 2) continue;
      for (int rep = 0; rep < 6; ++rep) {
        const Graph g = random_regular(n, d, static_cast<std::uint64_t>(d * 1000 + n * 10 + rep));
        ++graphs;
        for (int k = 1; k <= d; ++k)
          for (int t = 0; t < 5; ++t) {
            const auto rep2 = characterization_check(g, random_subset(rng, n, rng.unit()), k);
            REQUIRE(rep2.complement_rule.has_value());
            CHECK(*rep2.complement_rule == rep2.simulated);
          }
      }
    }
  }
  CHECK(graphs > 100);
}

TEST_CASE("degenerate edge bound on generated graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng.below(4));
    const int n = r + static_cast<int>(rng.below(12));
    std::vector<Edge> es;
    for (Vertex u = 0; u < r; ++u)
      for (Vertex v = u + 1; v < r; ++v) es.emplace_back(u, v);
    const bool maximal = rng.chance(0.5);
    for (Vertex v = r; v < n; ++v) {
      std::vector<Vertex> earlier(static_cast<std::size_t>(v));
      for (Vertex u = 0; u < v; ++u) earlier[static_cast<std::size_t>(u)] = u;
      rng.shuffle(earlier);
      const int take = maximal ? r : static_cast<int>(rng.below(static_cast<std::uint64_t>(r) + 1));
      for (int i = 0; i < take; ++i) es.emplace_back(earlier[static_cast<std::size_t>(i)], v);
    }
    const Graph h = Graph::from_edges(n, es);
    REQUIRE(is_r_degenerate(h, r).degenerate);
    const long long ceiling = degenerate_edge_ceiling(n, r);
    CHECK(h.edge_count() <= ceiling);
    CHECK((h.edge_count() == ceiling) == is_maximal_r_degenerate(h, r));
    if (maximal) CHECK(h.edge_count() == ceiling);
  }
}

TEST_CASE("minimum sets are minimal") {
  for (const auto& e : cubic_corpus(14)) {
    const auto res = ck_exact(e.graph, 2);
    CAPTURE(e.recipe.to_string());
    CHECK(is_conversion_set(e.graph, res.witness, 2));
    res.witness.for_each([&](Vertex v) {
      VertexSet smaller = res.witness;
      smaller.erase(v);
      CHECK_FALSE(is_conversion_set(e.graph, smaller, 2));
    });
  }
}

TEST_CASE("verification suites are listed and deterministic") {
  const auto& suites = verification_suites();
  CHECK(suites.size() >= 20);
  const auto a = verify_proposition("prop-kbound");
  const auto b = verify_proposition("prop-kbound");
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) CHECK(a.instances[i].observed == b.instances[i].observed);
  CHECK(a.pass());
  CHECK_THROWS(verify_proposition("no-such-suite"));
}
