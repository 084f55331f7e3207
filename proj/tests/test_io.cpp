#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/error.hpp"
#include "convlab/io.hpp"

using namespace convlab;

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(catalog("k4")) == "C~");
  CHECK(to_graph6(catalog("petersen")) == "IheA@GUAo");
  CHECK(to_graph6(Graph::empty(0)) == "?");
  CHECK(from_graph6(">>graph6<<C~\n") == catalog("k4"));
}

TEST_CASE("graph6 round trip") {
  for (const Graph& g : {catalog("j5"), catalog("heawood"), random_gnp(63, 0.1, 1), random_gnp(64, 0.1, 2),
                         random_gnp(70, 0.05, 3), Graph::empty(1)})
    CHECK(from_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
  CHECK_THROWS_AS(from_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
}

TEST_CASE("edge list") {
  const Graph g = catalog("prism");
  const std::string text = to_edge_list(g);
  CHECK(text.rfind("6 9\n0 1\n", 0) == 0);
  CHECK(from_edge_list(text) == g);
  CHECK_THROWS_AS(from_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(from_edge_list("x"), ParseError);
}

TEST_CASE("autodetect and file reading") {
  CHECK(parse_graph("  4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n") == catalog("k4"));
  CHECK(parse_graph("C~") == catalog("k4"));
  const std::string path = "convlab_io_test.g6";
  {
    std::ofstream f(path);
    f << to_graph6(catalog("petersen")) << "\n";
  }
  CHECK(read_graph_file(path) == catalog("petersen"));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph_file("does/not/exist"), Error);
}
