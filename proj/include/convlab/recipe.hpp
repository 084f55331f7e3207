#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "convlab/graph.hpp"

namespace convlab {

enum class RecipeKind {
  Join,
  ExtremalRegular,
  Block,
  PathReplace,
  CycleReplace,
  TriangleReplace,
  ProductGA,
  DoubledBlock,
  CalGMember,
  Catalog,
  RandomRegular,
};

const char* to_string(RecipeKind kind);

/// Declarative construction. `spec` is the full JSON object, e.g.
///   {"kind":"ProductGA","G":"k4","A":{"kind":"Catalog","name":"g1"},"a":0,"seed":0}
/// Graph-valued parameters are nested recipes; a bare string is shorthand
/// for a Catalog recipe.
struct Recipe {
  RecipeKind kind = RecipeKind::Catalog;
  nlohmann::json spec;

  /// Compact JSON, stable key order.
  std::string to_string() const { return spec.dump(); }
  friend bool operator==(const Recipe& a, const Recipe& b) { return a.spec == b.spec; }
};

/// Validates kind and required fields; throws ParseError.
Recipe parse_recipe(const nlohmann::json& spec);
Recipe parse_recipe(const std::string& text);
inline Recipe parse_recipe(const char* text) { return parse_recipe(std::string(text)); }

Graph build(const Recipe& recipe);

namespace recipes {
Recipe catalog(const std::string& name);
Recipe join(const Recipe& h, int k);
Recipe extremal_regular(int k);
Recipe block(int i);
Recipe path_replace(int m, int leaf_block);
Recipe cycle_replace(int m, int block);
Recipe triangle_replace(const Recipe& g);
Recipe product(const Recipe& g, const Recipe& a, Vertex removed, std::uint64_t seed = 0);
Recipe doubled_block(const Recipe& b, Vertex u, Vertex v);
Recipe calG_member(const Recipe& tree);
Recipe random_regular(int n, int d, std::uint64_t seed, bool connected = true);
}  // namespace recipes

}  // namespace convlab
