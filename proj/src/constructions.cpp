#include "rwise/constructions.hpp"

#include <string>
#include <vector>

#include "rwise/errors.hpp"
#include "rwise/subset.hpp"

namespace rwise {

namespace {

void check_block_params(const Params& p) {
  p.validate();
  if (p.n < p.r + p.t) throw UsageError("need n >= r + t, got " + p.to_string());
}

// Appends core ∪ S for every `extra`-subset S of `pool`.
void append_extensions(std::vector<Subset>& out, Subset core, Subset pool, int extra) {
  for_each_k_subset(pool, extra, [&](const Subset& s) {
    out.push_back(core | s);
    return true;
  });
}

}  // namespace

Family build_G(const Params& p) {
  check_block_params(p);
  const int head = p.r + p.t;
  const Subset outside = Subset::range(head + 1, p.n);
  std::vector<Subset> members;
  for (int i = 1; i <= head; ++i) {
    Subset core = Subset::prefix(head);
    core.erase(i);
    append_extensions(members, core, outside, p.k - head + 1);
  }
  return Family(p.n, p.k, std::move(members));
}

Family build_Gprime(const Params& p) {
  check_block_params(p);
  const int head = p.r + p.t;
  const Family g = build_G(p);
  std::vector<Subset> members(g.begin(), g.end());
  append_extensions(members, Subset::prefix(head), Subset::range(head + 1, p.n), p.k - head);
  return Family(p.n, p.k, std::move(members));
}

Family build_G_block(const Params& p, int i) {
  check_block_params(p);
  const int head = p.r + p.t;
  if (i < 1 || i > head) throw UsageError("block index must be in [1, r+t] = [1, " + std::to_string(head) + "]");
  Subset core = Subset::prefix(head);
  core.erase(i);
  std::vector<Subset> members;
  append_extensions(members, core, Subset::range(head + 1, p.n), p.k - head + 1);
  return Family(p.n, p.k, std::move(members));
}

Family build_trivial(int n, int k, int t) {
  if (n < 1 || n > kMaxGround) throw UsageError("n must be in 1.." + std::to_string(kMaxGround));
  if (t < 1 || t > k || k > n) throw UsageError("need 1 <= t <= k <= n");
  std::vector<Subset> members;
  append_extensions(members, Subset::prefix(t), Subset::range(t + 1, n), k - t);
  return Family(n, k, std::move(members));
}

Family build_frankl(int n, int k, int t, int ell) {
  if (n < 1 || n > kMaxGround) throw UsageError("n must be in 1.." + std::to_string(kMaxGround));
  if (t < 1 || t > k || k > n) throw UsageError("need 1 <= t <= k <= n");
  if (ell < t + 2 || ell > k + 1 || ell > n) {
    throw UsageError("ell must satisfy t+2 <= ell <= min(k+1, n), got ell=" + std::to_string(ell));
  }
  const Subset head = Subset::prefix(t);
  const Subset middle = Subset::range(t + 1, ell);
  std::vector<Subset> members;
  // [t] ⊆ F and F meets [t+1, ell].
  for_each_k_subset(Subset::range(t + 1, n), k - t, [&](const Subset& s) {
    if (!(s & middle).empty()) members.push_back(head | s);
    return true;
  });
  // F misses exactly one element of [t] and contains [t+1, ell].
  for (int a = 1; a <= t; ++a) {
    Subset core = head | middle;
    core.erase(a);
    append_extensions(members, core, Subset::range(ell + 1, n), k - ell + 1);
  }
  return Family(n, k, std::move(members));
}

Family build_two_cover(int n, int k, int t) {
  if (n < 1 || n > kMaxGround) throw UsageError("n must be in 1.." + std::to_string(kMaxGround));
  if (t < 1 || k < t + 2 || n < k + 2) throw UsageError("two-cover family needs t >= 1, k >= t+2, n >= k+2");
  const Subset head = Subset::prefix(t);
  const Subset pair = Subset::range(t + 1, t + 2);
  const Subset x = Subset::range(t + 3, k + 2);
  std::vector<Subset> members;
  for_each_k_subset(Subset::range(t + 1, n), k - t, [&](const Subset& s) {
    if (!(s & pair).empty()) members.push_back(head | s);
    return true;
  });
  members.push_back(head | x);
  const Subset outside = Subset::range(t + 3, n);
  for (int a = 1; a <= t; ++a) {
    Subset core = head | pair;
    core.erase(a);
    for_each_k_subset(outside, k - t - 1, [&](const Subset& s) {
      if (!(s & x).empty()) members.push_back(core | s);
      return true;
    });
  }
  return Family(n, k, std::move(members));
}

Family build_two_block(const Params& p) {
  p.validate();
  const int head = p.r + p.t;
  if (p.n < 2 * head) throw UsageError("two-block family needs n >= 2r+2t");
  if (p.k < 2 * head - 2) throw UsageError("two-block family needs k >= 2r+2t-2");
  const Subset first = Subset::prefix(head);
  const Subset second = Subset::range(head + 1, 2 * head);
  const Subset rest = Subset::range(2 * head + 1, p.n);
  std::vector<Subset> members;
  for (int a = head - 1; a <= head; ++a) {
    for (int b = head - 1; b <= head; ++b) {
      const int extra = p.k - a - b;
      if (extra < 0) continue;
      for (const Subset& x : k_subsets(first, a)) {
        for (const Subset& y : k_subsets(second, b)) append_extensions(members, x | y, rest, extra);
      }
    }
  }
  return Family(p.n, p.k, std::move(members));
}

}  // namespace rwise
