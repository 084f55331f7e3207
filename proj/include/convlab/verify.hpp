#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "convlab/graph.hpp"
#include "convlab/recipe.hpp"

namespace convlab {

struct VerificationInstance {
  std::string recipe;  // replayable recipe JSON, plus any seed-set context
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct VerificationOutcome {
  std::string id;
  std::string statement;
  int size_limit = 0;
  std::vector<VerificationInstance> instances;
  std::chrono::duration<double> runtime{0};

  bool pass() const;
  int failures() const;
};

struct SuiteInfo {
  std::string id;
  std::string statement;
  // Largest order solved exactly unless overridden.
  int default_size_limit = 0;
};

const std::vector<SuiteInfo>& verification_suites();

/// Runs one suite. size_limit <= 0 selects the suite default. Throws
/// PreconditionError for an unknown id.
VerificationOutcome verify_proposition(const std::string& id, int size_limit = 0);

/// All suites on up to `threads` workers; results in listing order.
std::vector<VerificationOutcome> verify_all(int size_limit = 0, int threads = 0);

/// CONVLAB_THREADS if set and positive, else the hardware concurrency.
int default_thread_count();

struct CorpusEntry {
  Recipe recipe;
  Graph graph;
};

/// Cubic test graphs of order <= max_order: catalog entries, block
/// replacements, triangle replacements, class members, a doubled block and
/// seeded random cubic graphs. Order-stable.
std::vector<CorpusEntry> cubic_corpus(int max_order);

/// Seeded random connected d-regular graphs on n_min..n_max vertices.
std::vector<CorpusEntry> random_regular_corpus(int d, int n_min, int n_max, int per_order, std::uint64_t seed);

}  // namespace convlab
