#pragma once

#include <string>
#include <vector>

#include "rwise/family.hpp"

namespace rwise {

/// |T ∩ F| >= t for every member F.
bool is_t_cover(const Subset& cover, const Family& fam, int t);

/// τ_t: the least size of a t-cover. Throws UsageError on an empty family.
int covering_number(const Family& fam, int t);

/// Every t-cover of size exactly τ_t, in increasing bit-vector order.
std::vector<Subset> min_covers(const Family& fam, int t);

/// Every t-cover with at most `max_size` elements, drawn from all of [n], in
/// increasing bit-vector order. For exploration on small ground sets.
std::vector<Subset> covers_up_to(const Family& fam, int t, int max_size);

/// Shape of the minimum-cover family of a maximal t-intersecting family.
enum class CoverPattern {
  Trivial,      // τ_t = t
  FullSimplex,  // all (t+1)-subsets of a (t+2)-set; the family is G'_{2,t}
  Case1,        // a single (t+1)-set
  Case2,        // [t] ∪ {t+1}, [t] ∪ {t+2}
  Case3,        // [t] ∪ {j} for j in [t+1, ell], t+3 <= ell <= k+1
  Unclassified  // τ_t >= t+2
};

std::string to_string(CoverPattern pattern);

struct CoverReport {
  int tau = 0;
  std::vector<Subset> min_covers;
  CoverPattern classification = CoverPattern::Unclassified;
  /// Case3 only.
  int ell = 0;
  /// Common t-set of the covers in Case1/2/3 (image [t] under the witness).
  Subset core;
  /// Relabeling of [n] (witness[e] = image of e) carrying the min covers onto
  /// the reference pattern. Empty for Trivial and Unclassified.
  std::vector<int> witness;
  /// Pairwise |C ∩ C'| >= t over the min covers.
  bool covers_t_intersecting = true;
};

/// Classifies the minimum t-covers of a maximal 2-wise t-intersecting family.
/// Throws UsageError for r != 2, PreconditionError when fam is not maximal
/// t-intersecting, InconsistencyError when τ_t = t+1 and no pattern matches.
CoverReport classify_cover_family(const Family& fam, int t, int r = 2);

}  // namespace rwise
