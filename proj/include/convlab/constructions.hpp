#pragma once

#include <cstdint>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

// Every constructor checks its output (regularity, order, designated seeds)
// and throws Error if a check fails; precondition failures throw
// PreconditionError with a message naming the violated condition.

/// H ∨ K̄_{k-t} for t-regular H of order k, t < k. H keeps ids 0..k-1; the
/// new vertices are k..2k-t-1, each joined to all of H.
Graph join_with_empty(const Graph& h, int k);

/// (k+1)-regular graph of order 2k+2 converted by the seed {0..k-1}.
/// Ids: seed 0..k-1, then u1 = k, v1 = k+1, u2, v2, ... and, for odd k, a
/// final vertex w. Layer i >= 1 is {u_i, v_i}; w converts one step after
/// the last pair.
Graph extremal_regular(int k);
VertexSet extremal_seed(int k);

struct BuildingBlock {
  Graph graph;
  // Degree-2 vertices, ascending.
  std::vector<Vertex> ports;
  // A 2-conversion set of size 2.
  VertexSet conversion_pair;
};

/// Blocks H1..H4 (catalog "h1".."h4").
BuildingBlock building_block(int i);

/// Path P_m with leaves replaced by H1 or H3 (leaf_block = 1 or 3) and
/// internal vertices by H2. Blocks are laid out left to right; an internal
/// block uses port 0 towards the left and port 3 towards the right.
Graph path_replacement(int m, int leaf_block);

/// Cycle C_m with every vertex replaced by H2 or H4 (block = 2 or 4); block i
/// joins its port 3 to port 0 of block i+1 (mod m).
Graph cycle_replacement(int m, int block);

/// T(G): vertex v becomes triangle 3v, 3v+1, 3v+2; corner 3v+j takes the edge
/// to the j-th smallest neighbour of v.
Graph triangle_replace(const Graph& g);

/// G∘A⁻ for r-regular G and A. Copy of A - a for vertex v occupies
/// v*(|A|-1) .. (v+1)*(|A|-1)-1 in the ascending order of A's remaining ids.
/// Ports are the neighbours of a, ranked by id. With seed 0 the j-th
/// smallest G-neighbour of v uses port j; otherwise each G-vertex gets a
/// seeded random port permutation.
Graph product_GA(const Graph& g, const Graph& a, Vertex removed, std::uint64_t seed = 0);

/// Two copies of B - {u, v} (ids 0..n-3 in ascending original order, then
/// the primed copy at n-2..) joined by aa', bb', cd', dc' with a < b the
/// other neighbours of u and c < d those of v.
Graph doubled_block(const Graph& b, Vertex u, Vertex v);

/// Tree with internal degree 3: internal vertex -> triangle, leaf -> K4 with
/// edge x0x1 subdivided by s (local ids x0, x1, y, z, s). Tree vertices are
/// expanded in id order; a triangle's corner j goes to its j-th smallest
/// neighbour.
Graph calG_member(const Graph& tree);

/// d-regular graph on n vertices by randomized point pairing with restarts.
/// `connected` rejects disconnected outcomes.
Graph random_regular(int n, int d, std::uint64_t seed, bool connected = true);

/// G(n, p) random graph.
Graph random_gnp(int n, double p, std::uint64_t seed);

}  // namespace convlab
