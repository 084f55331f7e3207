#pragma once

#include <optional>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

/// Backtracking search; mapping[p] = image of pattern vertex p.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

/// Distinct vertex sets of `host` inducing a copy of `pattern`.
std::vector<VertexSet> induced_copies(const Graph& host, const Graph& pattern);

}  // namespace convlab
