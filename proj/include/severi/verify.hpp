#pragma once

// Cross-checks of every counting, lattice and normal-form identity over an
// exhaustive polygon corpus plus seeded random unimodular trials.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "severi/corpus.hpp"

namespace severi {

struct VerifyOptions {
  CorpusSpec corpus;
  /// Random polygons tested for invariance under unimodular affine maps.
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Test hook: deliberately breaks the count comparison.
  bool inject_fault = false;
};

struct CheckTally {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
  /// First few failing inputs, for diagnostics.
  std::vector<std::string> examples;
};

struct VerifyReport {
  std::size_t polygons = 0;
  std::size_t trials = 0;
  std::vector<CheckTally> checks;

  bool ok() const;
};

/// Runs every check; the report is identical for any thread count.
VerifyReport verify(const VerifyOptions& options);

}  // namespace severi
