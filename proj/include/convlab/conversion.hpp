#pragma once

#include <optional>
#include <string>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

/// Record of an irreversible k-threshold process.
///
/// layers[0] is the seed; layers[t] holds the vertices that convert at step t,
/// each having at least k neighbours in layers[0..t-1]. `time` is the last t
/// with a nonempty layer (0 if nothing beyond the seed converts).
struct ConversionTrace {
  int threshold = 0;
  std::vector<VertexSet> layers;
  VertexSet converted;
  bool complete = false;
  int time = 0;

  /// Union of layers[from..].
  VertexSet converted_from(int from) const;
};

/// Synchronous cumulative update until a fixed point. Requires k >= 1.
ConversionTrace run_process(const Graph& g, const VertexSet& seed, int k);

/// Closure of `seed` under the k-threshold rule (order-free worklist).
VertexSet conversion_closure(const Graph& g, const VertexSet& seed, int k);
bool is_conversion_set(const Graph& g, const VertexSet& s, int k);

/// Every u in U has fewer than k neighbours outside U. U must be nonempty.
bool is_k_immune(const Graph& g, const VertexSet& u, int k);

/// Peels X by deleting any vertex with >= k neighbours outside the current
/// set (ascending-id sweeps) and returns what is left. The result is the
/// largest k-immune subset of X, empty iff V - X converts G.
VertexSet residual_core(const Graph& g, const VertexSet& x, int k);

struct CharacterizationReport {
  bool simulated = false;
  // Present when G is (k + r)-regular with r >= 0.
  std::optional<int> r;
  std::optional<bool> complement_rule;
  std::string rule;  // "V-S independent", "V-S forest", "V-S r-degenerate"
};

/// Simulation next to the complement test for regular graphs; the two must agree.
CharacterizationReport characterization_check(const Graph& g, const VertexSet& s, int k);

/// "t: v1 v2 ..." per layer, one line each.
std::string trace_to_text(const ConversionTrace& trace);
/// Rebuilds layers from trace_to_text output; completion fields recomputed for `n`.
ConversionTrace trace_from_text(const std::string& text, int n, int k);

}  // namespace convlab
