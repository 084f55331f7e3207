#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

enum class SolveMethod { Oracle, ComplementBnB };
const char* to_string(SolveMethod m);

struct SolveResult {
  int value = 0;
  // Lexicographically least minimum k-conversion set.
  VertexSet witness;
  SolveMethod method = SolveMethod::Oracle;
  std::int64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

struct SolverOptions {
  int oracle_max_order = 30;
};

/// Subsets in increasing size, each size in lexicographic order; the first
/// converting subset is returned. Throws GuardError above oracle_max_order.
SolveResult ck_oracle(const Graph& g, int k, const SolverOptions& opts = {});

/// Regular G of degree k + r (r >= 0): c_k = n - (largest induced
/// r-degenerate subgraph), found by branch-and-bound. Other inputs go to the
/// oracle. The witness matches ck_oracle's.
SolveResult ck_exact(const Graph& g, int k, const SolverOptions& opts = {});

/// Largest X with G[X] r-degenerate whose complement is lexicographically
/// least among optimal complements. Order limit 256 (GuardError beyond).
VertexSet maximum_induced_degenerate(const Graph& g, int r, std::int64_t* nodes = nullptr);

/// Order of a largest induced forest.
int forest_number(const Graph& g);
/// Minimum decycling set (complement of a largest induced forest).
VertexSet minimum_decycling_set(const Graph& g);

/// Every k-conversion set of size c_k, in lexicographic order. Subject to the
/// oracle guard.
std::vector<VertexSet> all_minimum_conversion_sets(const Graph& g, int k, const SolverOptions& opts = {});

/// Every subset of size `size` in lexicographic order is offered to `visit`
/// until it returns true. Returns whether a visit returned true.
template <class Visit>
bool for_each_subset_of_size(int n, int size, Visit&& visit) {
  if (size < 0 || size > n) return false;
  std::vector<Vertex> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (visit(static_cast<const std::vector<Vertex>&>(idx))) return true;
    int i = size - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace convlab
