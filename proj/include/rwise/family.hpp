#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rwise/subset.hpp"

namespace rwise {

/// The quadruple (n, k, r, t) governing predicates, builders and bounds.
///
/// validate() accepts 1 <= t <= k - r + 1. The upper end k - r + 1 is the
/// boundary case k = r + t - 1 in which G_{r,t} is a single copy of each
/// (r+t-1)-subset of [r+t]; it is needed for the k = 2 experiments.
/// standard_range() reports the usual 1 <= t <= k - r.
struct Params {
  int n = 0;
  int k = 0;
  int r = 2;
  int t = 1;

  /// Throws UsageError; `max_n` is the ground-set cap (bitset width by default).
  void validate(int max_n = kMaxGround) const;
  bool standard_range() const { return t >= 1 && t <= k - r; }
  std::string to_string() const;
};

/// A k-uniform family over [n]. Members are kept sorted by bit-vector value and
/// are unique; construction rejects duplicates rather than dropping them.
class Family {
 public:
  Family() = default;
  Family(int n, int k);
  Family(int n, int k, std::vector<Subset> members);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::span<const Subset> members() const { return members_; }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const Subset& s) const;
  /// Union of all members.
  Subset support() const;
  /// Copy with one more member; throws if `s` is already present or has the wrong size.
  Family with(const Subset& s) const;
  /// Image under a permutation of [n]; perm[e] is the image of e, perm[0] unused.
  Family relabeled(std::span<const int> perm) const;

  std::string to_string() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Subset> members_;
};

}  // namespace rwise
