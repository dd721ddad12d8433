#pragma once

#include "rwise/family.hpp"

namespace rwise {

/// G_{r,t}: k-sets meeting [r+t] in exactly r+t-1 elements.
Family build_G(const Params& p);

/// G'_{r,t}: k-sets meeting [r+t] in at least r+t-1 elements.
Family build_Gprime(const Params& p);

/// The block {F ∈ G_{r,t} : i ∉ F}, for i in [r+t]. Blocks partition G_{r,t}.
Family build_G_block(const Params& p, int i);

/// All k-sets containing [t].
Family build_trivial(int n, int k, int t);

/// {F : [t] ⊆ F, F ∩ [t+1, ell] ≠ ∅} ∪ {F : |F ∩ [t]| = t-1, [t+1, ell] ⊆ F}
/// with t+2 <= ell <= k+1. Always 2-wise t-intersecting. Its (t+1)-covers
/// include [t] ∪ {j} for every j in [t+1, ell]; at ell = t+2 the family is
/// exactly G'_{2,t}.
Family build_frankl(int n, int k, int t, int ell);

/// A maximal t-intersecting family whose minimum t-covers are exactly
/// [t] ∪ {t+1} and [t] ∪ {t+2}. With X = [t+3, k+2] and F0 = [t] ∪ X it is
///   {F ⊇ [t] ∪ {t+1}} ∪ {F ⊇ [t] ∪ {t+2}} ∪ {F0}
///   ∪ {F : |F ∩ [t]| = t-1, {t+1, t+2} ⊆ F, F ∩ X ≠ ∅}.
/// Needs k >= t+2 and n >= k+2.
Family build_two_cover(int n, int k, int t);
/// All k-sets meeting both [r+t] and [r+t+1, 2r+2t] in at least r+t-1 elements.
/// Needs n >= 2r+2t and k >= 2r+2t-2. The family has no (r+1,t)-triangles when
/// t >= 2; for t = 1 it is still built (see two_block_zero_guarantee).
Family build_two_block(const Params& p);

inline bool two_block_zero_guarantee(int t) { return t >= 2; }

}  // namespace rwise
