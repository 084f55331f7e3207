#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convlab/graph.hpp"
#include "convlab/rational.hpp"

namespace convlab {

enum class BoundSide { Lower, Upper, Exact };

struct BoundEntry {
  std::string name;
  BoundSide side = BoundSide::Lower;
  Rational value;
  // Ceiling for lower bounds, floor for upper bounds, the value itself for exact.
  std::int64_t integer_value = 0;
  bool applicable = false;
  std::string citation;
};

struct BoundReport {
  int k = 0;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const;
  /// Largest applicable lower bound (or exact value) as an integer; 0 if none.
  std::int64_t best_lower() const;
  /// Smallest applicable upper bound (or exact value) as an integer.
  std::optional<std::int64_t> best_upper() const;
};

/// Closed-form lower bounds on c_k(G). Regularity-gated entries are present
/// but inapplicable when G is irregular or r = deg - k falls outside 0 <= r < k.
BoundReport lower_bounds(const Graph& g, int k);

/// c_2 upper bounds for cubic G of order n > 4; throws PreconditionError otherwise.
BoundReport upper_bounds_cubic(const Graph& g);

/// Structural membership in the family built from trees with internal degree 3
/// (internal vertices -> triangles, leaves -> K4 with one edge subdivided).
bool in_class_calG(const Graph& g);

/// Isomorphic to catalog "g1" or "g2".
bool is_exceptional_order8(const Graph& g);

enum class Equality { MeetsKPlusOneEquality, MeetsGeneralEquality, NoEquality };
const char* to_string(Equality e);

struct EqualityReport {
  Equality verdict = Equality::NoEquality;
  int r = 0;
  Rational bound;              // ((k-r)n + (r+1)r) / (2k)
  bool meets_rational_bound = false;
  bool meets_ceiled_bound = false;
  bool independent = false;    // S independent
  bool complement_condition = false;  // r = 1: G-S a tree; r >= 2: maximal r-degenerate
};

/// Equality test for the (k+r)-regular lower bound on a k-conversion set S.
/// Requires G regular of degree k + r with 0 <= r < k; throws
/// PreconditionError if not, or if S does not convert G.
EqualityReport equality_certificate(const Graph& g, const VertexSet& s, int k);

/// Raw formulas, exposed for grid tests.
Rational k_plus_one_value(std::int64_t n, std::int64_t k);
Rational general_value(std::int64_t n, std::int64_t k, std::int64_t r);
Rational deficit_value(std::int64_t n, std::int64_t k, std::int64_t r);
Rational near_regular_value(std::int64_t n, std::int64_t k);

}  // namespace convlab
