#include <doctest.h>

#include "convlab/catalog.hpp"
#include "convlab/error.hpp"
#include "convlab/graph.hpp"
#include "convlab/vertex_set.hpp"

using namespace convlab;

TEST_CASE("vertex set basics") {
  VertexSet s(70, {0, 3, 65});
  CHECK(s.size() == 3);
  CHECK(s.contains(65));
  CHECK_FALSE(s.contains(64));
  CHECK(s.to_string() == "0,3,65");
  CHECK(s.complement().size() == 67);
  s.erase(3);
  CHECK(s.members() == std::vector<Vertex>{0, 65});
  CHECK(parse_vertex_list(10, "1, 4,7") == VertexSet(10, {1, 4, 7}));
  CHECK(parse_vertex_list(10, "").empty());
  CHECK_THROWS_AS(parse_vertex_list(10, "1,x"), Error);
  CHECK_THROWS_AS(parse_vertex_list(10, "12"), Error);
}

TEST_CASE("graph construction and views") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {1, 0}});
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(4, 3));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {3, 4}});
  CHECK(g.induced_edge_count(VertexSet(5, {0, 1, 3})) == 1);

  std::vector<Vertex> ids;
  const Graph h = g.induced(VertexSet(5, {1, 2, 4}), &ids);
  CHECK(ids == std::vector<Vertex>{1, 2, 4});
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(0, 1));

  CHECK(g.without_edge(0, 1).edge_count() == 3);
  CHECK(g.with_edge(0, 3).has_edge(3, 0));
  CHECK(disjoint_union(g, g).order() == 10);
  CHECK(disjoint_union(g, g).has_edge(8, 9));
}

TEST_CASE("graph rejects bad edges") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), PreconditionError);
}

TEST_CASE("catalog orders and degrees") {
  struct Row {
    const char* name;
    int n, m;
  };
  for (const Row r : {Row{"k4", 4, 6}, Row{"k33", 6, 9}, Row{"prism", 6, 9}, Row{"q3", 8, 12}, Row{"petersen", 10, 15},
                      Row{"dodecahedron", 20, 30}, Row{"j5", 20, 30}, Row{"heawood", 14, 21}, Row{"g1", 8, 12},
                      Row{"g2", 8, 12}, Row{"sharp8", 8, 16}, Row{"cubic12", 12, 18}, Row{"octahedron", 6, 12},
                      Row{"cycle-7", 7, 7}, Row{"star-3", 4, 3}, Row{"matching-6", 6, 3}, Row{"complete-5", 5, 10}}) {
    CAPTURE(r.name);
    const Graph g = catalog(r.name);
    CHECK(g.order() == r.n);
    CHECK(g.edge_count() == r.m);
  }
  CHECK_THROWS_AS(catalog("nope"), PreconditionError);
  CHECK_THROWS_AS(catalog("cycle-x"), PreconditionError);
  CHECK_THROWS_AS(catalog("matching-5"), PreconditionError);
  CHECK(catalog_entries().size() >= 17);
}
