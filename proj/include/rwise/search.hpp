#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rwise/bigint.hpp"
#include "rwise/family.hpp"

namespace rwise {

/// Orderings tried by canonical_form before it gives up.
inline constexpr std::uint64_t kMaxCanonicalOrderings = 3'628'800;  // 10!

/// A byte string equal for two families iff they are isomorphic (same n, k and
/// related by a permutation of [n]).
///
/// Elements that can be swapped without changing the family (twins) are grouped
/// into classes; a class occupies a block of consecutive labels and the order
/// inside it is irrelevant. Classes are sorted by a relabeling invariant and the
/// lexicographically least image over all orderings of tied classes is returned.
/// Throws UsageError when more than kMaxCanonicalOrderings orderings would be
/// needed; with at most 10 support elements that never happens.
std::string canonical_form(const Family& fam);

/// Relabeling-invariant summary (degree and codegree statistics). Equal for
/// isomorphic families but may also coincide for non-isomorphic ones.
std::string invariant_fingerprint(const Family& fam);

/// Summary of one maximal family found by a search.
struct ClassSummary {
  Family family;
  BigInt triangles;
  bool trivial = false;
};

struct SearchReport {
  std::string mode;  // "exhaustive" or "stochastic"
  Params params;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  unsigned workers = 1;
  BigInt best_count = 0;
  Family best_family;
  std::uint64_t families_examined = 0;
  /// Families whose count came from the τ_t = t shortcut.
  std::uint64_t trivial_shortcuts = 0;
  bool complete = false;
  /// Set when deduplication fell back to invariant_fingerprint (possible over-merging).
  bool approximate_dedup = false;
  /// N_{r+1,t}(G_{r,t}) at the search parameters.
  BigInt reference_count = 0;
  /// best_count > reference_count.
  bool exceedance = false;
  /// Exhaustive mode: one entry per isomorphism class, in emission order.
  std::vector<ClassSummary> classes;
};

/// Largest vertex count (C(n,k)) accepted by enumerate_maximal_r2.
inline constexpr std::uint64_t kMaxIntersectionGraph = 200;

/// Every maximal t-intersecting k-uniform family on [n], one per isomorphism
/// class. Maximal families are the maximal cliques of the graph on C([n],k)
/// joining sets that meet in >= t elements; cliques come from Bron-Kerbosch
/// with pivoting and are deduplicated by canonical_form. Returns the emitted
/// classes. Throws UsageError when C(n,k) > kMaxIntersectionGraph.
struct EnumerationStats {
  std::uint64_t maximal_cliques = 0;
  bool approximate_dedup = false;
};
std::vector<Family> enumerate_maximal_r2(int n, int k, int t, const std::function<void(const Family&)>& emit = {},
                                         EnumerationStats* stats = nullptr);

/// Runs enumerate_maximal_r2 and counts triangles of every class (r = 2).
SearchReport exhaustive_search(int n, int k, int t);

/// Called once per visited family: the family, whether the trivial shortcut
/// supplied its count, and the count.
using VisitFn = std::function<void(const Family&, bool shortcut, const BigInt& count)>;

/// `budget` rounds of: draw random k-sets, keeping those compatible with the
/// ones kept so far, then saturate and count. Deterministic for a fixed seed
/// with one worker. With several workers each runs its share of the budget
/// from its own derived seed; results merge by maximum count (ties go to the
/// lower worker index). The visitor is only honoured with one worker.
SearchReport stochastic_search(const Params& p, std::uint64_t seed, std::uint64_t budget, unsigned workers = 1,
                               const VisitFn& visit = {});

}  // namespace rwise
