#pragma once

#include <cstdint>
#include <vector>

namespace rwise::naive {

// Reference implementations straight from the definitions, on sorted int
// vectors. Exponential and slow on purpose; used to cross-check the fast
// routines on small inputs.

using Set = std::vector<int>;
using SetList = std::vector<Set>;

int meet_size(const SetList& sets);

/// Every r-tuple with repetition meets in >= t elements.
bool intersecting(const SetList& fam, int r, int t);

/// Triangles over all (r+1)-subsets of distinct members.
std::uint64_t count_triangles(const SetList& fam, int r, int t);

/// Least |T|, T ⊆ [n], with |T ∩ F| >= t for all F; tries all 2^n subsets.
int covering_number(const SetList& fam, int n, int t);

/// All minimum t-covers, each sorted, in lexicographic order.
SetList min_covers(const SetList& fam, int n, int t);

bool maximal(const SetList& fam, int n, int k, int r, int t);

/// All k-subsets of [n] in lexicographic order.
SetList all_k_subsets(int n, int k);

}  // namespace rwise::naive
