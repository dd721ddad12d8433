#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "rwise/family.hpp"
#include "rwise/naive.hpp"
#include "rwise/random.hpp"

namespace testing {

using rwise::Family;
using rwise::Subset;

inline Family fam(int n, int k, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Subset> members;
  for (const auto& s : sets) members.emplace_back(s);
  return Family(n, k, std::move(members));
}

inline std::vector<std::vector<int>> lists(const Family& f) {
  std::vector<std::vector<int>> out;
  for (const Subset& s : f) out.push_back(s.elements());
  return out;
}

inline std::vector<std::vector<int>> lists(const std::vector<Subset>& sets) {
  std::vector<std::vector<int>> out;
  for (const Subset& s : sets) out.push_back(s.elements());
  return out;
}

inline int between(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rwise::uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n; i > 1; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(between(rng, 1, i))]);
  return perm;
}

// Up to m distinct random k-subsets of [n], no structure.
inline Family random_family(std::mt19937_64& rng, int n, int k, int m) {
  std::vector<Subset> members;
  for (int i = 0; i < m; ++i) {
    const Subset s = rwise::random_k_subset(rng, n, k);
    if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(s);
  }
  return Family(n, k, std::move(members));
}

}  // namespace testing
