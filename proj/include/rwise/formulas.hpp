#pragma once

#include <string>

#include "rwise/bigint.hpp"
#include "rwise/family.hpp"

namespace rwise {

/// C(n, k); zero whenever k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

/// N_{r+1,t}(G_{r,t}) in closed form. A triangle takes one set from each of r+1
/// distinct blocks G_i; the parts outside [r+t] (s-subsets of an m-set,
/// m = n-r-t, s = k-r-t+1) must have empty common intersection, counted by
/// inclusion-exclusion over the common elements:
///   C(r+t, r+1) * sum_j (-1)^j C(m, j) C(m-j, s-j)^{r+1}.
BigInt exact_count_G(const Params& p);

/// n >= k^4, the hypothesis of the bounds of the 2-wise argument.
bool meets_k4_gate(long long n, long long k);

/// (999/1000) C(r+t, r+1) C(n-r-t, k-r-t+1)^{r+1}. Evaluated for any n; the
/// guarantee exact_count_G >= this value is only claimed when meets_k4_gate.
ExactRational g_count_lower_bound(const Params& p);

/// k^2 C(t+2, 2) C(n-t-2, k-t-2): size bound for maximal t-intersecting
/// families with covering number at least t+2.
BigInt wide_cover_size_bound(int n, int k, int t);

/// Relaxed size bounds for maximal t-intersecting families with τ_t = t+1, by
/// cover pattern: 1 -> (6/5), 2 -> (21/10), 3 -> (k+1), each times C(n-t-1, k-t-1).
ExactRational cover_case_size_bound(int n, int k, int t, int cover_case);

/// (r-2)(s-t)+t: an r-wise t-intersecting family with τ_t = s is this-intersecting.
int intersection_floor(int r, int s, int t);

/// ((k-s+2)/(ell-s+2))^{s-1} C(k, ell) C(n-ell-s+t, k-ell-s+t): size bound for
/// ell-intersecting families with τ_t >= s.
ExactRational level_size_bound(int n, int k, int t, int ell, int s);
/// The same bound at s = t+1, ell = r+t-2: ((k-t+1)/(r-1))^t C(k, r+t-2) C(n-r-t+1, k-r-t+1).
ExactRational level_size_bound_clique(const Params& p);
/// The relaxation k^{r+2t-2} C(n-r-t+1, k-r-t+1) of the specialized bound.
BigInt level_size_bound_relaxed(const Params& p);

/// The four size comparisons that come with an "n >= c k^d" range: covering
/// number at least t+2 (r >= 3), and cover hypergraphs with a non-clique
/// component, a clique of order above r+t, or one below r+t.
enum class ThresholdKind { WideCover, NotClique, TooLarge, TooSmall };

/// "wide-cover", "not-clique", "too-large", "too-small".
std::string to_string(ThresholdKind kind);
/// Accepts the names above, or the numeric codes 4.3 .. 4.6 used on the command line.
ThresholdKind parse_threshold_kind(const std::string& text);

/// Constants (c, d) with "n >= c k^d" as the range of a size comparison.
struct ThresholdSpec {
  ThresholdKind kind = ThresholdKind::NotClique;
  /// Exact c when c_exact, otherwise a rational upper bound on c.
  ExactRational c;
  bool c_exact = true;
  /// The defining expression of c, for reports.
  std::string c_expression;
  ExactRational d;
};

/// Threshold constants. WideCover requires r >= 3 (its d has an r-2 denominator),
/// and its c is max{x^{1/((r+1)(r-2))}, 2}: exact (= 2) when x <= 2^{(r+1)(r-2)},
/// else replaced by an upper bound with denominator 10^6 from integer root bracketing.
ThresholdSpec threshold_n0(int r, int t, ThresholdKind kind);

/// An integer N >= c k^d (using the upper bound of c when inexact). n >= N
/// therefore certifies n >= c k^d.
BigInt threshold_upper(const ThresholdSpec& spec, long long k);

}  // namespace rwise
