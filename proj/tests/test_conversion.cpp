#include <doctest.h>

#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/conversion.hpp"
#include "convlab/error.hpp"
#include "convlab/random.hpp"
#include "oracles.hpp"

using namespace convlab;

namespace {

VertexSet from_mask(int n, oracle::Mask m) {
  VertexSet s(n);
  for (int v = 0; v < n; ++v)
    if (m >> v & 1) s.insert(v);
  return s;
}

}  // namespace

TEST_CASE("process layers on a path") {
  const Graph p = catalog("path-5");
  const auto tr = run_process(p, VertexSet(5, {0, 4}), 1);
  REQUIRE(tr.layers.size() == 3);
  CHECK(tr.layers[0] == VertexSet(5, {0, 4}));
  CHECK(tr.layers[1] == VertexSet(5, {1, 3}));
  CHECK(tr.layers[2] == VertexSet(5, {2}));
  CHECK(tr.complete);
  CHECK(tr.time == 2);
  CHECK(tr.converted_from(1) == VertexSet(5, {1, 2, 3}));
  CHECK_FALSE(run_process(p, VertexSet(5, {0, 4}), 2).complete);
}

TEST_CASE("K4 with two seeds converts at k=2") {
  const Graph g = catalog("k4");
  CHECK(is_conversion_set(g, VertexSet(4, {0, 1}), 2));
  CHECK_FALSE(is_conversion_set(g, VertexSet(4, {0}), 2));
  CHECK(is_conversion_set(g, VertexSet(4, {0, 1, 2}), 3));
  CHECK_FALSE(is_conversion_set(g, VertexSet(4, {0, 1}), 3));
}

TEST_CASE("closure matches naive oracle") {
  Rng rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_gnp(14, 0.25, 300 + static_cast<std::uint64_t>(trial));
    const auto adj = oracle::rows(g);
    const auto mask = static_cast<oracle::Mask>(rng.below(1u << 14));
    const int k = 1 + static_cast<int>(rng.below(3));
    CHECK(conversion_closure(g, from_mask(14, mask), k) == from_mask(14, oracle::closure(adj, mask, k)));
  }
}

TEST_CASE("monotone in the seed set") {
  Rng rng(10);
  const Graph g = catalog("dodecahedron");
  for (int trial = 0; trial < 100; ++trial) {
    VertexSet s(20);
    for (Vertex v = 0; v < 20; ++v)
      if (rng.chance(0.25)) s.insert(v);
    VertexSet t = s;
    t.insert(static_cast<Vertex>(rng.below(20)));
    CHECK(conversion_closure(g, s, 2).is_subset_of(conversion_closure(g, t, 2)));
  }
}

TEST_CASE("characterization for regular graphs") {
  const Graph g = catalog("petersen");
  // Complement of an independent set: k = 3.
  const auto a = characterization_check(g, VertexSet(10, {0, 1, 2, 3, 4, 5}), 3);
  CHECK(a.r == 0);
  REQUIRE(a.complement_rule.has_value());
  CHECK(*a.complement_rule == a.simulated);
  // Decycling set: k = 2, r = 1.
  const auto b = characterization_check(g, VertexSet(10, {0, 2, 8}), 2);
  CHECK(b.simulated);
  CHECK(b.complement_rule == true);
  const auto c = characterization_check(catalog("path-4"), VertexSet(4, {0}), 1);
  CHECK_FALSE(c.r.has_value());
  CHECK(c.simulated);
}

TEST_CASE("immune sets and residual core") {
  const Graph g = catalog("petersen");
  VertexSet outer(10, {0, 1, 2, 3, 4});
  CHECK(is_k_immune(g, outer, 2));  // each outer vertex has one neighbour outside
  CHECK_FALSE(is_k_immune(g, outer, 1));
  const VertexSet seed = outer.complement();
  CHECK_FALSE(is_conversion_set(g, seed, 2));
  const VertexSet core = residual_core(g, outer, 2);
  CHECK(core == outer);
  CHECK(core.is_subset_of(conversion_closure(g, seed, 2).complement()));
}

TEST_CASE("trace text round trip") {
  const Graph g = catalog("petersen");
  const auto tr = run_process(g, VertexSet(10, {0, 2, 8}), 2);
  const std::string text = trace_to_text(tr);
  CHECK(text.rfind("0: 0 2 8\n", 0) == 0);
  const auto back = trace_from_text(text, 10, 2);
  CHECK(back.layers == tr.layers);
  CHECK(back.complete == tr.complete);
  CHECK_THROWS_AS(trace_from_text("0: 0 1\n1: 1 2\n", 10, 2), Error);
  CHECK_THROWS_AS(trace_from_text("1: 0\n", 10, 2), Error);
}
