#include "convlab/recipe.hpp"

#include <array>
#include <utility>

#include "convlab/catalog.hpp"
#include "convlab/constructions.hpp"
#include "convlab/error.hpp"

namespace convlab {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<RecipeKind, const char*>, 11> kKinds = {{
    {RecipeKind::Join, "Join"},
    {RecipeKind::ExtremalRegular, "ExtremalRegular"},
    {RecipeKind::Block, "Block"},
    {RecipeKind::PathReplace, "PathReplace"},
    {RecipeKind::CycleReplace, "CycleReplace"},
    {RecipeKind::TriangleReplace, "TriangleReplace"},
    {RecipeKind::ProductGA, "ProductGA"},
    {RecipeKind::DoubledBlock, "DoubledBlock"},
    {RecipeKind::CalGMember, "CalGMember"},
    {RecipeKind::Catalog, "Catalog"},
    {RecipeKind::RandomRegular, "RandomRegular"},
}};

const json& field(const json& spec, const char* key) {
  if (!spec.contains(key)) throw ParseError(std::string("recipe ") + spec.dump() + " is missing '" + key + "'");
  return spec.at(key);
}

long long integer(const json& spec, const char* key) {
  const json& v = field(spec, key);
  if (!v.is_number_integer()) throw ParseError(std::string("recipe field '") + key + "' must be an integer");
  return v.get<long long>();
}

std::uint64_t seed_of(const json& spec) {
  if (!spec.contains("seed")) return 0;
  const json& v = spec.at("seed");
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError("recipe field 'seed' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

// "H2" or 2.
int block_index(const json& spec, const char* key) {
  const json& v = field(spec, key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.size() == 2 && (s[0] == 'H' || s[0] == 'h') && s[1] >= '1' && s[1] <= '4') return s[1] - '0';
  }
  throw ParseError(std::string("recipe field '") + key + "' must name a block H1..H4");
}

Graph sub_build(const json& spec, const char* key) { return build(parse_recipe(field(spec, key))); }

}  // namespace

const char* to_string(RecipeKind kind) {
  for (auto [k, name] : kKinds)
    if (k == kind) return name;
  return "?";
}

Recipe parse_recipe(const json& spec) {
  if (spec.is_string()) return recipes::catalog(spec.get<std::string>());
  if (!spec.is_object()) throw ParseError("recipe must be a JSON object or a catalog name");
  const json& kind = field(spec, "kind");
  if (!kind.is_string()) throw ParseError("recipe 'kind' must be a string");
  for (auto [k, name] : kKinds)
    if (kind.get<std::string>() == name) {
      Recipe r{k, spec};
      // Normalise nested shorthand so equal recipes compare and print equally.
      for (const char* key : {"H", "G", "A", "B", "tree"})
        if (r.spec.contains(key)) r.spec[key] = parse_recipe(r.spec[key]).spec;
      return r;
    }
  throw ParseError("unknown recipe kind '" + kind.get<std::string>() + "'");
}

Recipe parse_recipe(const std::string& text) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("recipe is not valid JSON: ") + e.what());
  }
  return parse_recipe(spec);
}

Graph build(const Recipe& recipe) {
  const json& s = recipe.spec;
  switch (recipe.kind) {
    case RecipeKind::Catalog: {
      const json& name = field(s, "name");
      if (!name.is_string()) throw ParseError("recipe field 'name' must be a string");
      return catalog(name.get<std::string>());
    }
    case RecipeKind::Join: return join_with_empty(sub_build(s, "H"), static_cast<int>(integer(s, "k")));
    case RecipeKind::ExtremalRegular: return extremal_regular(static_cast<int>(integer(s, "k")));
    case RecipeKind::Block: return building_block(block_index(s, "i")).graph;
    case RecipeKind::PathReplace: return path_replacement(static_cast<int>(integer(s, "m")), block_index(s, "leaf"));
    case RecipeKind::CycleReplace: return cycle_replacement(static_cast<int>(integer(s, "m")), block_index(s, "block"));
    case RecipeKind::TriangleReplace: return triangle_replace(sub_build(s, "G"));
    case RecipeKind::ProductGA:
      return product_GA(sub_build(s, "G"), sub_build(s, "A"), static_cast<Vertex>(integer(s, "a")), seed_of(s));
    case RecipeKind::DoubledBlock:
      return doubled_block(sub_build(s, "B"), static_cast<Vertex>(integer(s, "u")), static_cast<Vertex>(integer(s, "v")));
    case RecipeKind::CalGMember: return calG_member(sub_build(s, "tree"));
    case RecipeKind::RandomRegular: {
      const bool connected = !s.contains("connected") || s.at("connected").get<bool>();
      return random_regular(static_cast<int>(integer(s, "n")), static_cast<int>(integer(s, "d")), seed_of(s), connected);
    }
  }
  throw Error("unhandled recipe kind");
}

namespace recipes {

Recipe catalog(const std::string& name) { return {RecipeKind::Catalog, {{"kind", "Catalog"}, {"name", name}}}; }
Recipe join(const Recipe& h, int k) { return {RecipeKind::Join, {{"kind", "Join"}, {"H", h.spec}, {"k", k}}}; }
Recipe extremal_regular(int k) { return {RecipeKind::ExtremalRegular, {{"kind", "ExtremalRegular"}, {"k", k}}}; }
Recipe block(int i) { return {RecipeKind::Block, {{"kind", "Block"}, {"i", "H" + std::to_string(i)}}}; }
Recipe path_replace(int m, int leaf_block) {
  return {RecipeKind::PathReplace, {{"kind", "PathReplace"}, {"m", m}, {"leaf", "H" + std::to_string(leaf_block)}}};
}
Recipe cycle_replace(int m, int block) {
  return {RecipeKind::CycleReplace, {{"kind", "CycleReplace"}, {"m", m}, {"block", "H" + std::to_string(block)}}};
}
Recipe triangle_replace(const Recipe& g) {
  return {RecipeKind::TriangleReplace, {{"kind", "TriangleReplace"}, {"G", g.spec}}};
}
Recipe product(const Recipe& g, const Recipe& a, Vertex removed, std::uint64_t seed) {
  return {RecipeKind::ProductGA, {{"kind", "ProductGA"}, {"G", g.spec}, {"A", a.spec}, {"a", removed}, {"seed", seed}}};
}
Recipe doubled_block(const Recipe& b, Vertex u, Vertex v) {
  return {RecipeKind::DoubledBlock, {{"kind", "DoubledBlock"}, {"B", b.spec}, {"u", u}, {"v", v}}};
}
Recipe calG_member(const Recipe& tree) {
  return {RecipeKind::CalGMember, {{"kind", "CalGMember"}, {"tree", tree.spec}}};
}
Recipe random_regular(int n, int d, std::uint64_t seed, bool connected) {
  return {RecipeKind::RandomRegular,
          {{"kind", "RandomRegular"}, {"n", n}, {"d", d}, {"seed", seed}, {"connected", connected}}};
}

}  // namespace recipes

}  // namespace convlab
