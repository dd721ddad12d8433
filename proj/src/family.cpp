#include "rwise/family.hpp"

#include <algorithm>

#include "rwise/errors.hpp"

namespace rwise {

void Params::validate(int max_n) const {
  if (n < 1 || n > max_n) throw UsageError("n must be in 1.." + std::to_string(max_n) + ", got " + std::to_string(n));
  if (k < 1 || k > n) throw UsageError("k must satisfy 1 <= k <= n, got k=" + std::to_string(k));
  if (r < 2) throw UsageError("r must be at least 2, got " + std::to_string(r));
  if (t < 1) throw UsageError("t must be at least 1, got " + std::to_string(t));
  if (t > k - r + 1) {
    throw UsageError("t must satisfy t <= k - r + 1, got " + to_string());
  }
}

std::string Params::to_string() const {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ", r=" + std::to_string(r) +
         ", t=" + std::to_string(t) + ")";
}

Family::Family(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxGround) throw UsageError("n must be in 1.." + std::to_string(kMaxGround));
  if (k < 0 || k > n) throw UsageError("k must satisfy 0 <= k <= n");
}

Family::Family(int n, int k, std::vector<Subset> members) : Family(n, k) {
  const Subset ground = Subset::prefix(n);
  for (const Subset& m : members) {
    if (m.size() != k) throw UsageError("member " + m.to_string() + " does not have exactly " + std::to_string(k) + " elements");
    if (!m.is_subset_of(ground)) throw UsageError("member " + m.to_string() + " leaves [" + std::to_string(n) + "]");
  }
  std::sort(members.begin(), members.end());
  const auto dup = std::adjacent_find(members.begin(), members.end());
  if (dup != members.end()) throw UsageError("duplicate member " + dup->to_string());
  members_ = std::move(members);
}

bool Family::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Subset Family::support() const {
  Subset u;
  for (const Subset& m : members_) u |= m;
  return u;
}

Family Family::with(const Subset& s) const {
  std::vector<Subset> next = members_;
  next.push_back(s);
  return Family(n_, k_, std::move(next));
}

Family Family::relabeled(std::span<const int> perm) const {
  if (perm.size() < static_cast<std::size_t>(n_) + 1) throw UsageError("relabeling shorter than ground set");
  std::vector<Subset> next;
  next.reserve(members_.size());
  for (const Subset& m : members_) next.push_back(relabel(m, perm));
  return Family(n_, k_, std::move(next));
}

std::string Family::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ' ';
    s += members_[i].to_string();
  }
  return s + "]";
}

}  // namespace rwise
