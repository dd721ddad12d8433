#include "rwise/formulas.hpp"

#include <algorithm>

#include "rwise/errors.hpp"

namespace rwise {

namespace {

// Formulas need no bitsets; n only has to fit the int arithmetic on binomials.
constexpr int kFormulaMaxN = 1'000'000'000;

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt pow_big(const BigInt& base, unsigned exp) {
  BigInt result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

ExactRational pow_rat(const ExactRational& base, unsigned exp) {
  ExactRational result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt ceil_of(const ExactRational& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (num >= 0) return ceil_div(num, den);
  return -((-num) / den);
}

// Smallest integer a >= 0 with a^q >= x (x >= 0 rational, q >= 1).
BigInt ceil_root(const ExactRational& x, unsigned q) {
  if (x <= 0) return 0;
  BigInt hi = 1;
  while (ExactRational(pow_big(hi, q)) < x) hi *= 2;
  BigInt lo = hi / 2;  // lo^q < x unless lo == 0
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (ExactRational(pow_big(mid, q)) >= x) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return ExactRational(pow_big(lo, q)) >= x ? lo : hi;
}

void check_params_basic(int n, int k, int t) {
  if (n < 1) throw UsageError("n must be positive");
  if (k < 1 || k > n) throw UsageError("need 1 <= k <= n");
  if (t < 1) throw UsageError("t must be at least 1");
}

}  // namespace

BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt exact_count_G(const Params& p) {
  p.validate(kFormulaMaxN);
  const long long m = p.n - p.r - p.t;
  const long long s = p.k - p.r - p.t + 1;
  if (m < 0) throw UsageError("need n >= r + t");
  BigInt sum = 0;
  for (long long j = 0; j <= std::min(m, s); ++j) {
    const BigInt term = binomial(m, j) * pow_big(binomial(m - j, s - j), static_cast<unsigned>(p.r + 1));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return binomial(p.r + p.t, p.r + 1) * sum;
}

bool meets_k4_gate(long long n, long long k) { return BigInt(n) >= pow_big(BigInt(k), 4); }

ExactRational g_count_lower_bound(const Params& p) {
  p.validate(kFormulaMaxN);
  const BigInt block = binomial(p.n - p.r - p.t, p.k - p.r - p.t + 1);
  return ExactRational(999, 1000) * ExactRational(binomial(p.r + p.t, p.r + 1) * pow_big(block, static_cast<unsigned>(p.r + 1)));
}

BigInt wide_cover_size_bound(int n, int k, int t) {
  check_params_basic(n, k, t);
  return BigInt(k) * k * binomial(t + 2, 2) * binomial(n - t - 2, k - t - 2);
}

ExactRational cover_case_size_bound(int n, int k, int t, int cover_case) {
  check_params_basic(n, k, t);
  ExactRational factor;
  switch (cover_case) {
    case 1: factor = ExactRational(6, 5); break;
    case 2: factor = ExactRational(21, 10); break;
    case 3: factor = ExactRational(k + 1); break;
    default: throw UsageError("cover case must be 1, 2 or 3, got " + std::to_string(cover_case));
  }
  return factor * ExactRational(binomial(n - t - 1, k - t - 1));
}

int intersection_floor(int r, int s, int t) {
  if (r < 2) throw UsageError("r must be at least 2");
  if (t < 1) throw UsageError("t must be at least 1");
  if (s < t) throw UsageError("covering number s must be at least t");
  return (r - 2) * (s - t) + t;
}

ExactRational level_size_bound(int n, int k, int t, int ell, int s) {
  check_params_basic(n, k, t);
  if (s < 1) throw UsageError("s must be at least 1");
  if (ell < t) throw UsageError("intersection level ell must be at least t");
  if (ell - s + 2 <= 0) throw UsageError("ell - s + 2 must be positive");
  const ExactRational ratio(BigInt(k - s + 2), BigInt(ell - s + 2));
  return pow_rat(ratio, static_cast<unsigned>(s - 1)) * ExactRational(binomial(k, ell)) *
         ExactRational(binomial(n - ell - s + t, k - ell - s + t));
}

ExactRational level_size_bound_clique(const Params& p) {
  p.validate(kFormulaMaxN);
  return level_size_bound(p.n, p.k, p.t, p.r + p.t - 2, p.t + 1);
}

BigInt level_size_bound_relaxed(const Params& p) {
  p.validate(kFormulaMaxN);
  return pow_big(BigInt(p.k), static_cast<unsigned>(p.r + 2 * p.t - 2)) *
         binomial(p.n - p.r - p.t + 1, p.k - p.r - p.t + 1);
}

std::string to_string(ThresholdKind kind) {
  switch (kind) {
    case ThresholdKind::WideCover: return "wide-cover";
    case ThresholdKind::NotClique: return "not-clique";
    case ThresholdKind::TooLarge: return "too-large";
    case ThresholdKind::TooSmall: return "too-small";
  }
  return "?";
}

ThresholdKind parse_threshold_kind(const std::string& text) {
  if (text == "wide-cover" || text == "4.3") return ThresholdKind::WideCover;
  if (text == "not-clique" || text == "4.4") return ThresholdKind::NotClique;
  if (text == "too-large" || text == "4.5") return ThresholdKind::TooLarge;
  if (text == "too-small" || text == "4.6") return ThresholdKind::TooSmall;
  throw UsageError("unknown threshold '" + text + "'; expected wide-cover, not-clique, too-large or too-small");
}

ThresholdSpec threshold_n0(int r, int t, ThresholdKind kind) {
  if (r < 2) throw UsageError("r must be at least 2");
  if (t < 1) throw UsageError("t must be at least 1");
  ThresholdSpec spec;
  spec.kind = kind;
  const ExactRational two(2);
  // (1000 * 2^{r+1} / 999) / C(r+t, r+1), shared by three of the four thresholds.
  const ExactRational clique_base =
      ExactRational(BigInt(1000) * pow_big(BigInt(2), static_cast<unsigned>(r + 1)), BigInt(999)) /
      ExactRational(binomial(r + t, r + 1));
  switch (kind) {
    case ThresholdKind::WideCover: {
      if (r < 3) throw UsageError("the wide-cover threshold needs r >= 3");
      const unsigned q = static_cast<unsigned>((r + 1) * (r - 2));
      const ExactRational base = ExactRational(BigInt(1000) * factorial(t - 1), BigInt(999) * factorial(r + t));
      spec.c_expression = "max{(" + base.str() + ")^(1/" + std::to_string(q) + "), 2}";
      if (base <= ExactRational(pow_big(BigInt(2), q))) {
        spec.c = two;
      } else {
        const BigInt scale = 1000000;
        const BigInt a = ceil_root(base * ExactRational(pow_big(scale, q)), q);
        spec.c = ExactRational(a, scale);
        spec.c_exact = false;
      }
      spec.d = std::max(ExactRational(BigInt(3 * r + 2 * t - 5), BigInt(r - 2)), ExactRational(1));
      break;
    }
    case ThresholdKind::NotClique:
      spec.c = std::max(clique_base, two);
      spec.c_expression = "max{(1000*2^(r+1)/999)/C(r+t,r+1), 2}";
      spec.d = r * (r + 2 * t - 1);
      break;
    case ThresholdKind::TooLarge:
      spec.c = std::max(ExactRational(clique_base * t), two);
      spec.c_expression = "max{(1000*2^(r+1)*t/999)/C(r+t,r+1), 2}";
      spec.d = r * (r + 2 * t - 2) + 1;
      break;
    case ThresholdKind::TooSmall:
      spec.c = std::max(clique_base, two);
      spec.c_expression = "max{(1000*2^(r+1)/999)/C(r+t,r+1), 2}";
      spec.d = r * (r + 2 * t - 1) + 2;
      break;
  }
  return spec;
}

BigInt threshold_upper(const ThresholdSpec& spec, long long k) {
  if (k < 1) throw UsageError("k must be positive");
  // ceil(k^{p/q}) is the least x with x^q >= k^p.
  const BigInt p = numerator(spec.d);
  const BigInt q = denominator(spec.d);
  const BigInt kp = pow_big(BigInt(k), p.convert_to<unsigned>());
  const BigInt power = ceil_root(ExactRational(kp), q.convert_to<unsigned>());
  return ceil_of(spec.c * ExactRational(power));
}

}  // namespace rwise
