#pragma once

#include <string>
#include <vector>

#include "convlab/graph.hpp"

namespace convlab {

struct CatalogEntry {
  std::string name;
  std::string description;
};

/// Fixed named graphs; see catalog_entries() for the list. Also accepts the
/// parametric families "empty-N", "complete-N", "cycle-N", "path-N",
/// "matching-N" (N even) and "star-N" (K_{1,N}).
/// Throws PreconditionError for unknown names.
Graph catalog(const std::string& name);

/// Fixed entries in listing order (families excluded).
const std::vector<CatalogEntry>& catalog_entries();

/// Names of all fixed entries that are cubic, in listing order.
std::vector<std::string> cubic_catalog_names();

}  // namespace convlab
