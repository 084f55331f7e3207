#include <doctest.h>

#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/error.hpp"
#include "convlab/recipe.hpp"

using namespace convlab;

TEST_CASE("recipes round trip through JSON text") {
  const std::vector<Recipe> list = {
      recipes::catalog("petersen"),
      recipes::join(recipes::catalog("cycle-4"), 4),
      recipes::extremal_regular(5),
      recipes::block(3),
      recipes::path_replace(3, 1),
      recipes::cycle_replace(3, 4),
      recipes::triangle_replace(recipes::catalog("k4")),
      recipes::product(recipes::catalog("k4"), recipes::catalog("g1"), 0, 2),
      recipes::doubled_block(recipes::catalog("petersen"), 0, 1),
      recipes::calG_member(recipes::catalog("star-3")),
      recipes::random_regular(12, 3, 9),
  };
  for (const auto& r : list) {
    CAPTURE(r.to_string());
    const Recipe back = parse_recipe(r.to_string());
    CHECK(back == r);
    CHECK(back.kind == r.kind);
    CHECK(build(back) == build(r));
  }
}

TEST_CASE("recipes build the named constructions") {
  CHECK(build(recipes::product(recipes::catalog("k4"), recipes::catalog("g1"), 0)) ==
        product_GA(catalog("k4"), catalog("g1"), 0));
  CHECK(build(recipes::block(2)) == catalog("h2"));
  CHECK(build(recipes::path_replace(2, 3)) == path_replacement(2, 3));
}

TEST_CASE("nested shorthand normalises") {
  const Recipe a = parse_recipe(R"({"kind":"ProductGA","G":"k4","A":"g1","a":0,"seed":0})");
  CHECK(a == recipes::product(recipes::catalog("k4"), recipes::catalog("g1"), 0, 0));
  CHECK(parse_recipe(R"("q3")") == recipes::catalog("q3"));
  CHECK(build(parse_recipe(R"({"kind":"Block","i":4})")) == catalog("h4"));
}

TEST_CASE("recipe errors") {
  CHECK_THROWS_AS(parse_recipe("{"), ParseError);
  CHECK_THROWS_AS(parse_recipe(R"({"kind":"Nope"})"), ParseError);
  CHECK_THROWS_AS(parse_recipe("[1]"), ParseError);
  CHECK_THROWS_AS(build(parse_recipe(R"({"kind":"Join","H":"cycle-4"})")), ParseError);
  CHECK_THROWS_AS(build(parse_recipe(R"({"kind":"PathReplace","m":"two","leaf":"H1"})")), ParseError);
  CHECK_THROWS_AS(build(parse_recipe(R"({"kind":"Block","i":"H9"})")), ParseError);
  CHECK_THROWS_AS(build(parse_recipe(R"({"kind":"ExtremalRegular","k":1})")), PreconditionError);
}
