#include "rwise/predicates.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "rwise/errors.hpp"

namespace rwise {

namespace {

void check_rt(int r, int t) {
  if (r < 2) throw UsageError("r must be at least 2, got " + std::to_string(r));
  if (t < 1) throw UsageError("t must be at least 1, got " + std::to_string(t));
}

// Drops duplicates and any set that contains another one. Replacing a set by a
// subset of it only shrinks intersections, so the minimal sets decide every
// "all multisets meet in >= t" question.
void keep_minimal(std::vector<Subset>& sets) {
  std::sort(sets.begin(), sets.end(), [](const Subset& a, const Subset& b) {
    const int sa = a.size(), sb = b.size();
    return sa != sb ? sa < sb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Subset> kept;
  kept.reserve(sets.size());
  for (const Subset& s : sets) {
    bool dominated = false;
    for (const Subset& m : kept) {
      if (m.is_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(s);
  }
  sets.swap(kept);
}

// Every multiset of at most `depth` sets drawn from `sets` meets in >= t elements.
// A multiset is split into its first element p and a multiset of later elements,
// which after projecting onto p is the same question one level down.
bool all_multisets_meet(std::vector<Subset> sets, int depth, int t, bool minimize) {
  if (sets.empty()) return true;
  if (minimize) keep_minimal(sets);
  for (const Subset& s : sets) {
    if (s.size() < t) return false;
  }
  if (depth <= 1) return true;
  if (depth == 2) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (intersection_size(sets[i], sets[j]) < t) return false;
      }
    }
    return true;
  }
  std::vector<Subset> projected;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    projected.clear();
    for (std::size_t j = i; j < sets.size(); ++j) projected.push_back(sets[i] & sets[j]);
    if (!all_multisets_meet(projected, depth - 1, t, true)) return false;
  }
  return true;
}

// Depth-first walk over (r+1)-subsets of members by increasing index, carrying
// the running intersection. `visit(indices, depth)` is called for full tuples.
template <typename Leaf>
void walk_tuples(std::span<const Subset> members, int size, std::size_t first_begin, std::size_t first_stride,
                 Leaf&& leaf) {
  const std::size_t m = members.size();
  if (size <= 0 || m < static_cast<std::size_t>(size)) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(size));
  std::vector<Subset> running(static_cast<std::size_t>(size));
  auto recurse = [&](auto&& self, int depth, std::size_t from) -> void {
    const std::size_t remaining = static_cast<std::size_t>(size - depth);
    for (std::size_t i = from; i + remaining <= m; ++i) {
      idx[static_cast<std::size_t>(depth)] = i;
      running[static_cast<std::size_t>(depth)] = depth == 0 ? members[i] : (running[static_cast<std::size_t>(depth - 1)] & members[i]);
      if (depth + 1 == size) {
        leaf(std::span<const std::size_t>(idx), running.back());
      } else {
        self(self, depth + 1, i + 1);
      }
    }
  };
  // The outermost loop is strided so that workers can split it.
  for (std::size_t i = first_begin; i + static_cast<std::size_t>(size) <= m; i += first_stride) {
    idx[0] = i;
    running[0] = members[i];
    if (size == 1) {
      leaf(std::span<const std::size_t>(idx), running[0]);
    } else {
      recurse(recurse, 1, i + 1);
    }
  }
}

bool tuple_is_triangle(std::span<const Subset> members, std::span<const std::size_t> idx, const Subset& all, int t) {
  if (all.size() > t - 1) return false;
  // Every leave-one-out intersection must reach t.
  for (std::size_t skip = 0; skip < idx.size(); ++skip) {
    Subset acc = Subset::prefix(kMaxGround);
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (j != skip) acc &= members[idx[j]];
    }
    if (acc.size() < t) return false;
  }
  return true;
}

std::uint64_t count_range(std::span<const Subset> members, int r, int t, bool checked, std::size_t begin,
                          std::size_t stride) {
  std::uint64_t count = 0;
  if (r == 2 && !checked) {
    // Triple loop with the pair intersection hoisted.
    const std::size_t m = members.size();
    for (std::size_t a = begin; a < m; a += stride) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const Subset ab = members[a] & members[b];
        if (ab.size() < t) continue;  // cannot happen for r-wise families
        for (std::size_t c = b + 1; c < m; ++c) {
          if (intersection_size(ab, members[c]) < t) ++count;
        }
      }
    }
    return count;
  }
  walk_tuples(members, r + 1, begin, stride, [&](std::span<const std::size_t> idx, const Subset& all) {
    if (checked) {
      if (tuple_is_triangle(members, idx, all, t)) ++count;
    } else if (all.size() < t) {
      ++count;
    }
  });
  return count;
}

}  // namespace

int intersect_size(std::span<const Subset> sets) {
  if (sets.empty()) throw UsageError("intersect_size needs at least one set");
  Subset acc = sets.front();
  for (const Subset& s : sets.subspan(1)) acc &= s;
  return acc.size();
}

bool is_r_wise_t_intersecting(const Family& fam, int r, int t) {
  check_rt(r, t);
  if (fam.empty()) return true;
  if (fam.k() < t) return false;
  std::vector<Subset> members(fam.begin(), fam.end());
  return all_multisets_meet(std::move(members), r, t, false);
}

bool can_extend(std::span<const Subset> members, const Subset& candidate, int r, int t) {
  check_rt(r, t);
  if (candidate.size() < t) return false;
  if (r == 2) {
    for (const Subset& m : members) {
      if (intersection_size(m, candidate) < t) return false;
    }
    return true;
  }
  std::vector<Subset> projected;
  projected.reserve(members.size() + 1);
  projected.push_back(candidate);
  for (const Subset& m : members) {
    const Subset p = m & candidate;
    if (p.size() < t) return false;
    projected.push_back(p);
  }
  return all_multisets_meet(std::move(projected), r - 1, t, true);
}

bool can_extend(const Family& fam, const Subset& candidate, int r, int t) {
  return can_extend(fam.members(), candidate, r, t);
}

bool is_triangle(std::span<const Subset> tuple, int r, int t) {
  check_rt(r, t);
  if (tuple.size() != static_cast<std::size_t>(r) + 1) {
    throw UsageError("a triangle has exactly r+1 = " + std::to_string(r + 1) + " sets, got " + std::to_string(tuple.size()));
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] == tuple[j]) throw UsageError("duplicate set " + tuple[i].to_string() + " in triangle candidate");
    }
  }
  std::vector<std::size_t> idx(tuple.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Subset all = tuple.front();
  for (const Subset& s : tuple) all &= s;
  return tuple_is_triangle(tuple, idx, all, t);
}

BigInt count_triangles(const Family& fam, int r, int t, CountOptions options) {
  check_rt(r, t);
  const bool intersecting = is_r_wise_t_intersecting(fam, r, t);
  if (!intersecting && !options.force) {
    throw PreconditionError("family is not " + std::to_string(r) + "-wise " + std::to_string(t) +
                            "-intersecting; triangle count is undefined (use force to count anyway)");
  }
  if (fam.size() < static_cast<std::size_t>(r) + 1) return 0;
  // A common t-set survives every intersection.
  if (is_trivial(fam, t)) return 0;

  const bool checked = !intersecting;
  const auto members = fam.members();
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) return BigInt(count_range(members, r, t, checked, 0, 1));

  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] { partial[w] = count_range(members, r, t, checked, w, workers); });
  }
  pool.clear();
  BigInt total = 0;
  for (auto p : partial) total += p;
  return total;
}

void for_each_triangle(const Family& fam, int r, int t, const std::function<void(std::span<const Subset>)>& visit,
                       bool force) {
  check_rt(r, t);
  const bool intersecting = is_r_wise_t_intersecting(fam, r, t);
  if (!intersecting && !force) {
    throw PreconditionError("family is not " + std::to_string(r) + "-wise " + std::to_string(t) + "-intersecting");
  }
  const auto members = fam.members();
  std::vector<Subset> tuple;
  walk_tuples(members, r + 1, 0, 1, [&](std::span<const std::size_t> idx, const Subset& all) {
    const bool hit = intersecting ? all.size() < t : tuple_is_triangle(members, idx, all, t);
    if (!hit) return;
    tuple.clear();
    for (std::size_t i : idx) tuple.push_back(members[i]);
    visit(tuple);
  });
}

bool is_trivial(const Family& fam, int t) {
  if (fam.empty()) return true;
  Subset core = fam[0];
  for (const Subset& m : fam) core &= m;
  return core.size() >= t;
}

bool is_maximal(const Family& fam, int r, int t) {
  if (!is_r_wise_t_intersecting(fam, r, t)) {
    throw PreconditionError("maximality is only defined for r-wise t-intersecting families");
  }
  if (choose_u64(fam.n(), fam.k()) > kMaxCandidateScan) throw UsageError("C(n,k) too large to scan for maximality");
  bool maximal = true;
  for_each_k_subset(fam.n(), fam.k(), [&](const Subset& c) {
    if (fam.contains(c)) return true;
    if (can_extend(fam, c, r, t)) {
      maximal = false;
      return false;
    }
    return true;
  });
  return maximal;
}

Family saturate(const Family& fam, int r, int t) {
  if (!is_r_wise_t_intersecting(fam, r, t)) {
    throw PreconditionError("saturate needs an r-wise t-intersecting family");
  }
  if (choose_u64(fam.n(), fam.k()) > kMaxCandidateScan) throw UsageError("C(n,k) too large to saturate");
  std::vector<Subset> members(fam.begin(), fam.end());
  for_each_k_subset(fam.n(), fam.k(), [&](const Subset& c) {
    if (!fam.contains(c) && can_extend(members, c, r, t)) members.push_back(c);
    return true;
  });
  return Family(fam.n(), fam.k(), std::move(members));
}

}  // namespace rwise
