#include "convlab/bounds.hpp"

#include <algorithm>

#include "convlab/catalog.hpp"
#include "convlab/conversion.hpp"
#include "convlab/degeneracy.hpp"
#include "convlab/error.hpp"
#include "convlab/isomorphism.hpp"
#include "convlab/structure.hpp"

namespace convlab {

namespace {

BoundEntry lower(std::string name, Rational value, bool applicable, std::string citation) {
  return {std::move(name), BoundSide::Lower, value, value.ceil(), applicable, std::move(citation)};
}

BoundEntry upper(std::string name, Rational value, bool applicable, std::string citation) {
  return {std::move(name), BoundSide::Upper, value, value.floor(), applicable, std::move(citation)};
}

// K4 with edge 0-1 subdivided by vertex 4.
const Graph& leaf_gadget() {
  static const Graph g = Graph::from_edges(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
  return g;
}

}  // namespace

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::int64_t BoundReport::best_lower() const {
  std::int64_t best = 0;
  for (const auto& e : entries)
    if (e.applicable && e.side != BoundSide::Upper) best = std::max(best, e.integer_value);
  return best;
}

std::optional<std::int64_t> BoundReport::best_upper() const {
  std::optional<std::int64_t> best;
  for (const auto& e : entries)
    if (e.applicable && e.side != BoundSide::Lower) best = best ? std::min(*best, e.integer_value) : e.integer_value;
  return best;
}

Rational k_plus_one_value(std::int64_t n, std::int64_t k) { return {n * (k - 1) + 2, 2 * k}; }

Rational general_value(std::int64_t n, std::int64_t k, std::int64_t r) {
  return {(k - r) * n + (r + 1) * r, 2 * k};
}

Rational deficit_value(std::int64_t n, std::int64_t k, std::int64_t r) { return {(k - r) * n, 2 * k}; }

Rational near_regular_value(std::int64_t n, std::int64_t k) { return {n + 2 * (k - 1), 2 * k}; }

BoundReport lower_bounds(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("threshold k must be >= 1");
  BoundReport rep;
  rep.k = k;
  const std::int64_t n = g.order();
  const auto d = regular_degree(g);
  const int r = d ? *d - k : -1;
  const bool in_range = d && r >= 0 && r < k;
  const bool k_plus_1 = d && r == 1;

  rep.entries.push_back(lower("trivial", Rational(std::min<std::int64_t>(k, n)), true,
                              "a seed smaller than k converts nothing"));
  rep.entries.push_back(lower("regular-k+1", k_plus_1 && k >= 2 ? k_plus_one_value(n, k) : Rational(0), k_plus_1 && k >= 2,
                              "(k+1)-regular, k >= 2: c_k >= ceil((n(k-1)+2)/(2k)); "
                              "equality iff S independent and G-S a tree"));
  rep.entries.push_back(lower("regular-k+r", in_range ? general_value(n, k, r) : Rational(0), in_range,
                              "(k+r)-regular, 0 <= r < k: c_k >= ((k-r)n+(r+1)r)/(2k); for r >= 1 "
                              "equality iff S independent and G[V-S] maximal r-degenerate"));
  rep.entries.push_back(lower("deficit", in_range ? deficit_value(n, k, r) : Rational(0), in_range,
                              "(k+r)-regular, 0 <= r < k: c_k >= (k-r)n/(2k)"));
  const bool near = in_range && r == k - 1;
  rep.entries.push_back(lower("near-regular", near ? near_regular_value(n, k) : Rational(0), near,
                              "(2k-1)-regular: c_k >= (n+2(k-1))/(2k)"));
  const bool rank_ok = k_plus_1 && g.max_degree() >= 2;
  rep.entries.push_back(lower("cycle-rank",
                              rank_ok ? Rational(g.edge_count() - n + 1, g.max_degree() - 1) : Rational(0), rank_ok,
                              "decycling number >= (m-n+1)/(max degree - 1); equals c_k when (k+1)-regular"));
  const auto packing = k_plus_1 ? disjoint_cycle_packing(g, g.all()) : std::vector<std::vector<Vertex>>{};
  rep.entries.push_back(lower("disjoint-cycles", Rational(static_cast<std::int64_t>(packing.size())), k_plus_1,
                              "(k+1)-regular with d vertex-disjoint cycles: c_k >= d (greedy packing)"));
  return rep;
}

bool is_exceptional_order8(const Graph& g) {
  if (g.order() != 8 || !is_cubic(g)) return false;
  return are_isomorphic(g, catalog("g1")) || are_isomorphic(g, catalog("g2"));
}

bool in_class_calG(const Graph& g) {
  if (!is_cubic(g) || !is_connected(g)) return false;
  const auto cut = bridges(g);
  if (cut.empty()) return false;
  Graph rest = g;
  for (auto [u, v] : cut) rest = rest.without_edge(u, v);
  std::vector<int> bridge_degree(g.order(), 0);
  for (auto [u, v] : cut) {
    ++bridge_degree[u];
    ++bridge_degree[v];
  }
  for (const VertexSet& part : components(rest)) {
    const Graph h = rest.induced(part, nullptr);
    if (part.size() == 3) {
      if (h.edge_count() != 3) return false;
      continue;  // every corner carries exactly one bridge since G is cubic
    }
    if (part.size() != 5 || !are_isomorphic(h, leaf_gadget())) return false;
    // The single bridge must leave from the subdivision vertex.
    int ports = 0;
    part.for_each([&](Vertex v) { ports += bridge_degree[v]; });
    if (ports != 1) return false;
  }
  return true;
}

BoundReport upper_bounds_cubic(const Graph& g) {
  if (!is_cubic(g)) throw PreconditionError("cubic upper bounds need a cubic graph");
  const std::int64_t n = g.order();
  if (n <= 4) throw PreconditionError("cubic upper bounds need order > 4");
  BoundReport rep;
  rep.k = 2;
  if (in_class_calG(g)) {
    const Rational exact(3 * n + 2, 8);
    rep.entries.push_back({"calG-exact", BoundSide::Exact, exact, exact.floor(), true,
                           "tree-built family (triangles and subdivided K4 leaves): c_2 = (3n+2)/8"});
  } else {
    rep.entries.push_back(upper("cubic-3n/8", Rational(3 * n, 8), true, "cubic outside the tree-built family: c_2 <= 3n/8"));
  }
  const bool tri_free = is_triangle_free(g);
  const bool exceptional = tri_free && is_exceptional_order8(g);
  rep.entries.push_back(upper("triangle-free-n/3", Rational(n, 3), tri_free && !exceptional,
                              exceptional ? "triangle-free but one of the two order-8 exceptions"
                                          : "triangle-free cubic, not an order-8 exception: c_2 <= n/3"));
  rep.entries.push_back(upper("2-connected", Rational(n + 2, 3), is_k_connected(g, 2),
                              "2-connected cubic: c_2 <= (n+2)/3"));
  return rep;
}

const char* to_string(Equality e) {
  switch (e) {
    case Equality::MeetsKPlusOneEquality: return "MeetsKPlusOneEquality";
    case Equality::MeetsGeneralEquality: return "MeetsGeneralEquality";
    case Equality::NoEquality: return "NoEquality";
  }
  return "?";
}

EqualityReport equality_certificate(const Graph& g, const VertexSet& s, int k) {
  if (k < 1) throw PreconditionError("threshold k must be >= 1");
  const auto d = regular_degree(g);
  if (!d || *d < k || *d - k >= k)
    throw PreconditionError("equality certificate needs a (k+r)-regular graph with 0 <= r < k");
  if (!is_conversion_set(g, s, k)) throw PreconditionError("S is not a k-conversion set");
  EqualityReport rep;
  rep.r = *d - k;
  rep.bound = general_value(g.order(), k, rep.r);
  const auto size = static_cast<std::int64_t>(s.size());
  rep.meets_rational_bound = Rational(size) == rep.bound;
  rep.meets_ceiled_bound = size == rep.bound.ceil();
  rep.independent = is_independent(g, s);
  const VertexSet rest = s.complement();
  if (rep.r == 1) {
    rep.complement_condition = !rest.empty() && is_acyclic(g, rest) && components(g, rest).size() == 1;
  } else if (rep.r >= 2) {
    rep.complement_condition = is_maximal_r_degenerate(g.induced(rest, nullptr), rep.r);
  }
  if (rep.r >= 1 && rep.independent && rep.complement_condition)
    rep.verdict = rep.r == 1 ? Equality::MeetsKPlusOneEquality : Equality::MeetsGeneralEquality;
  return rep;
}

}  // namespace convlab
