#pragma once

#include <optional>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

enum class ChromaticClass { Class1, Class2 };

const char* to_string(ChromaticClass c);

/// Common r if every vertex has degree r; nullopt otherwise (and for n = 0).
std::optional<int> regular_degree(const Graph& g);
bool is_cubic(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

/// True iff G[X] has no edges.
bool is_independent(const Graph& g, const VertexSet& x);
/// True iff G[X] contains no cycle.
bool is_acyclic(const Graph& g, const VertexSet& x);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Exact maximum independent set by max-degree branching with a greedy
/// colouring bound. Returns one maximum set (lowest ids preferred on ties).
VertexSet maximum_independent_set(const Graph& g);
int independence_number(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);
/// Shortest cycle of G[X] as a vertex list, empty when G[X] is acyclic.
std::vector<Vertex> shortest_cycle(const Graph& g, const VertexSet& x);

/// Greedy packing of vertex-disjoint cycles in G[X], shortest first.
std::vector<std::vector<Vertex>> disjoint_cycle_packing(const Graph& g, const VertexSet& x);

/// Cut edges by lowpoint DFS, as (u, v), u < v, sorted.
std::vector<Edge> bridges(const Graph& g);

/// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
/// stopping early once `cap` is reached.
int local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, int cap);
int local_edge_connectivity(const Graph& g, Vertex s, Vertex t, int cap);

int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);
bool is_k_edge_connected(const Graph& g, int k);

struct CyclicCutOptions {
  int max_edges = 200;
};

/// True iff no set of fewer than `c` edges splits G into two parts that each
/// contain a cycle. Exhaustive over edge subsets; cubic input, c <= 4.
bool cyclic_edge_connectivity_at_least(const Graph& g, int c, CyclicCutOptions opts = {});

/// Proper 3-edge-colouring by backtracking with forced propagation, for
/// graphs of maximum degree <= 3. Colours indexed like g.edges().
std::optional<std::vector<int>> three_edge_colouring(const Graph& g);
bool is_3_edge_colourable(const Graph& g);

/// Class 1 iff 3-edge-colourable. Bridged cubic graphs short-circuit to Class 2.
ChromaticClass chromatic_class(const Graph& g);

struct StructureReport {
  int order = 0;
  int edge_count = 0;
  std::optional<int> regular_degree;
  std::optional<int> girth;
  std::vector<Edge> bridge_list;
  bool connected = false;
  int vertex_connectivity = 0;
  int edge_connectivity = 0;
  std::optional<bool> cyclically_4_connected;  // cubic only
  std::optional<ChromaticClass> chromatic_class;  // connected cubic only
  bool triangle_free = false;
};

StructureReport classify(const Graph& g);

}  // namespace convlab
