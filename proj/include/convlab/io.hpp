#pragma once

#include <string>

#include "convlab/graph.hpp"

namespace convlab {

/// graph6 encoding (no ">>graph6<<" header, no trailing newline).
std::string to_graph6(const Graph& g);
/// Accepts an optional ">>graph6<<" header and surrounding whitespace.
Graph from_graph6(const std::string& text);

/// "n m" header, then one "u v" line per edge (u < v, sorted).
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// graph6 unless the first non-space byte is a digit (edge list).
Graph parse_graph(const std::string& text);
Graph read_graph_file(const std::string& path);

}  // namespace convlab
