#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rwise/family.hpp"

namespace rwise {

/// Named batches of checks. Each cross-checks one part of the toolkit against
/// an independent computation or a proven consequence.
enum class Suite {
  Oracle,         // fast routines vs naive definitions; closed-form count vs enumeration
  GCount,         // lower bound on N(G) at n >= k^4; N(G') = N(G)
  CoverPatterns,  // classification of minimum covers of maximal t-intersecting families
  SizeBounds,     // size bounds by cover pattern at n >= k^4
  PairFloor,      // pairwise intersection floor (r-2)(τ-t)+t for r-wise families
  TwoCliques,     // two-block families have no triangles
  Hypergraph      // cover hypergraph components, verdicts and their consequences
};

std::string to_string(Suite suite);
/// A suite name, or "all" for every suite in declaration order.
std::vector<Suite> parse_suites(const std::string& name);

struct VerifyOptions {
  int max_n = 9;
  int max_k = 5;
  std::uint64_t seed = 1;
  /// Random families per randomized check; 0 picks the suite default.
  int samples = 0;
  unsigned workers = 1;
};

struct Counterexample {
  std::string check;
  std::string detail;
  std::optional<Family> family;
  int r = 0;
  int t = 0;
};

struct SuiteResult {
  Suite suite = Suite::Oracle;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Checks deliberately not asserted (below a threshold, outside a guarantee).
  std::uint64_t skipped = 0;
  std::optional<Counterexample> first_failure;
  double seconds = 0;
};

SuiteResult run_suite(Suite suite, const VerifyOptions& options);

}  // namespace rwise
