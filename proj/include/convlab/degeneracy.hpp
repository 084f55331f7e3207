#pragma once

#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

struct DegeneracyResult {
  bool degenerate = false;
  // Removal order; each vertex has <= r neighbours among those removed after it.
  std::vector<Vertex> order;
  // Vertices left when peeling gets stuck: every one has > r neighbours in it.
  VertexSet core;
};

/// Peels G[X] by repeatedly deleting a vertex of induced degree <= r.
/// Queue-driven, seeded in ascending id order.
DegeneracyResult is_r_degenerate(const Graph& g, const VertexSet& x, int r);
inline DegeneracyResult is_r_degenerate(const Graph& g, int r) { return is_r_degenerate(g, g.all(), r); }

/// Degeneracy of G: smallest r for which G is r-degenerate.
int degeneracy(const Graph& g);

/// True iff H + xy fails to be r-degenerate for every non-adjacent pair x, y.
/// Throws PreconditionError if H is not r-degenerate.
bool is_maximal_r_degenerate(const Graph& h, int r);

/// Edge ceiling r*n - C(r+1, 2) for r-degenerate graphs on n >= r vertices.
long long degenerate_edge_ceiling(long long n, long long r);

}  // namespace convlab
