#include "rwise/naive.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace rwise::naive {

namespace {

Set meet(const Set& a, const Set& b) {
  Set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Calls visit on every non-decreasing index sequence of length len over [0, m).
bool each_multiset(std::size_t m, int len, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(len), 0);
  if (m == 0) return true;
  while (true) {
    if (!visit(idx)) return false;
    int pos = len - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - 1) --pos;
    if (pos < 0) return true;
    const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
    for (int j = pos; j < len; ++j) idx[static_cast<std::size_t>(j)] = v;
  }
}

}  // namespace

int meet_size(const SetList& sets) {
  if (sets.empty()) throw std::invalid_argument("meet of no sets");
  Set acc = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = meet(acc, sets[i]);
  return static_cast<int>(acc.size());
}

bool intersecting(const SetList& fam, int r, int t) {
  return each_multiset(fam.size(), r, [&](const std::vector<std::size_t>& idx) {
    SetList chosen;
    for (std::size_t i : idx) chosen.push_back(fam[i]);
    return meet_size(chosen) >= t;
  });
}

std::uint64_t count_triangles(const SetList& fam, int r, int t) {
  const std::size_t m = fam.size();
  const auto size = static_cast<std::size_t>(r + 1);
  if (m < size) return 0;
  std::uint64_t count = 0;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  do {
    SetList tuple;
    for (std::size_t i = 0; i < m; ++i) {
      if (pick[i]) tuple.push_back(fam[i]);
    }
    if (intersecting(tuple, r, t) && meet_size(tuple) <= t - 1) ++count;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

int covering_number(const SetList& fam, int n, int t) {
  const SetList covers = min_covers(fam, n, t);
  return static_cast<int>(covers.front().size());
}

SetList min_covers(const SetList& fam, int n, int t) {
  if (n > 24) throw std::invalid_argument("ground set too large for subset brute force");
  SetList best;
  std::size_t best_size = static_cast<std::size_t>(n) + 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Set cover;
    for (int e = 0; e < n; ++e) {
      if (mask & (1u << e)) cover.push_back(e + 1);
    }
    if (cover.size() > best_size) continue;
    bool ok = true;
    for (const Set& f : fam) {
      if (static_cast<int>(meet(cover, f).size()) < t) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (cover.size() < best_size) {
      best_size = cover.size();
      best.clear();
    }
    best.push_back(cover);
  }
  std::sort(best.begin(), best.end());
  return best;
}

bool maximal(const SetList& fam, int n, int k, int r, int t) {
  for (const Set& cand : all_k_subsets(n, k)) {
    if (std::find(fam.begin(), fam.end(), cand) != fam.end()) continue;
    SetList bigger = fam;
    bigger.push_back(cand);
    if (intersecting(bigger, r, t)) return false;
  }
  return true;
}

SetList all_k_subsets(int n, int k) {
  SetList out;
  if (k < 0 || k > n) return out;
  Set cur;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int e = next; e <= n - (k - static_cast<int>(cur.size())) + 1; ++e) {
      cur.push_back(e);
      rec(e + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace rwise::naive
