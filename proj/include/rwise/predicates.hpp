#pragma once

#include <functional>
#include <span>

#include "rwise/bigint.hpp"
#include "rwise/family.hpp"

namespace rwise {

/// |S_1 ∩ ... ∩ S_m|. Throws UsageError on an empty list.
int intersect_size(std::span<const Subset> sets);

/// True iff every choice of r members, repetition allowed, meets in at least t
/// elements. Equivalently every set of at most r distinct members; a family with
/// fewer than r members is judged on all of its member subsets.
bool is_r_wise_t_intersecting(const Family& fam, int r, int t);

/// Assuming `fam` is r-wise t-intersecting and `candidate` is not a member:
/// whether fam ∪ {candidate} still is.
bool can_extend(const Family& fam, const Subset& candidate, int r, int t);
bool can_extend(std::span<const Subset> members, const Subset& candidate, int r, int t);

/// An (r+1, t)-triangle: r+1 distinct sets, every r of them meeting in >= t
/// elements, all r+1 together in <= t-1.
bool is_triangle(std::span<const Subset> tuple, int r, int t);

struct CountOptions {
  /// Count even when the family is not r-wise t-intersecting.
  bool force = false;
  unsigned workers = 1;
};

/// N_{r+1,t}(fam). Throws PreconditionError when fam is not r-wise
/// t-intersecting unless options.force is set.
BigInt count_triangles(const Family& fam, int r, int t, CountOptions options = {});

/// Calls `visit` with the member tuple (in canonical order) of every triangle.
/// Same precondition handling as count_triangles.
void for_each_triangle(const Family& fam, int r, int t,
                       const std::function<void(std::span<const Subset>)>& visit, bool force = false);

/// Some t-set lies in every member (vacuously true for the empty family).
bool is_trivial(const Family& fam, int t);

/// No k-subset of [n] outside fam can be added without losing r-wise
/// t-intersection. Throws PreconditionError if fam is not r-wise t-intersecting.
bool is_maximal(const Family& fam, int r, int t);

/// Greedy completion: scans every k-subset of [n] in increasing bit-vector order
/// and adds each one that keeps the family r-wise t-intersecting.
Family saturate(const Family& fam, int r, int t);

/// Upper limit on C(n, k) for operations that scan all k-subsets of [n].
inline constexpr std::uint64_t kMaxCandidateScan = 20'000'000;

}  // namespace rwise
