#include "rwise/subset.hpp"

#include <limits>

#include "rwise/errors.hpp"

namespace rwise {

namespace {

using word = Subset::word;

constexpr word bit(int e) { return word{1} << (e - 1); }

void check_element(int e) {
  if (e < 1 || e > kMaxGround) {
    throw UsageError("element " + std::to_string(e) + " outside 1.." + std::to_string(kMaxGround));
  }
}

int ctz(word x) {
  const auto lo = static_cast<std::uint64_t>(x);
  if (lo != 0) return std::countr_zero(lo);
  return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

word low_mask(int m) { return m >= 128 ? ~word{0} : (word{1} << m) - 1; }

// Next bit pattern with the same popcount (Gosper's hack, branch-free shift form).
word next_combination(word x) {
  const word t = x | (x - 1);
  const word not_t = ~t;
  return (t + 1) | (((not_t & (~not_t + 1)) - 1) >> (ctz(x) + 1));
}

template <typename Visit>
bool gosper(int m, int k, Visit&& visit) {
  if (k < 0 || k > m) return true;
  if (k == 0) return visit(word{0});
  word x = low_mask(k);
  const word last = low_mask(k) << (m - k);
  while (true) {
    if (!visit(x)) return false;
    if (x == last) return true;
    x = next_combination(x);
  }
}

}  // namespace

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) insert(e);
}

Subset::Subset(std::span<const int> elements) {
  for (int e : elements) insert(e);
}

Subset Subset::prefix(int m) { return from_bits(m <= 0 ? word{0} : low_mask(m)); }

Subset Subset::range(int lo, int hi) {
  if (lo < 1) lo = 1;
  if (lo > hi) return {};
  return from_bits(prefix(hi).bits_ & ~prefix(lo - 1).bits_);
}

bool Subset::contains(int e) const {
  if (e < 1 || e > kMaxGround) return false;
  return (bits_ & bit(e)) != 0;
}

void Subset::insert(int e) {
  check_element(e);
  bits_ |= bit(e);
}

void Subset::erase(int e) {
  check_element(e);
  bits_ &= ~bit(e);
}

int Subset::max_element() const {
  if (bits_ == 0) return 0;
  const auto hi = high_word();
  if (hi != 0) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(low_word());
}

int Subset::min_element() const { return bits_ == 0 ? 0 : ctz(bits_) + 1; }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  word x = bits_;
  while (x != 0) {
    out.push_back(ctz(x) + 1);
    x &= x - 1;
  }
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

std::uint64_t choose_u64(int m, int k) {
  if (k < 0 || m < 0 || k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

bool for_each_k_subset(int n, int k, const std::function<bool(const Subset&)>& visit) {
  if (n > kMaxGround) throw UsageError("ground set larger than " + std::to_string(kMaxGround));
  return gosper(n, k, [&](word x) { return visit(Subset::from_bits(x)); });
}

bool for_each_k_subset(Subset pool, int k, const std::function<bool(const Subset&)>& visit) {
  const std::vector<int> elems = pool.elements();
  const int m = static_cast<int>(elems.size());
  return gosper(m, k, [&](word x) {
    word out = 0;
    while (x != 0) {
      out |= bit(elems[static_cast<std::size_t>(ctz(x))]);
      x &= x - 1;
    }
    return visit(Subset::from_bits(out));
  });
}

std::vector<Subset> k_subsets(Subset pool, int k) {
  std::vector<Subset> out;
  for_each_k_subset(pool, k, [&](const Subset& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

Subset relabel(const Subset& s, std::span<const int> perm) {
  Subset out;
  for (int e : s.elements()) {
    if (static_cast<std::size_t>(e) >= perm.size()) throw UsageError("relabeling does not cover element " + std::to_string(e));
    out.insert(perm[static_cast<std::size_t>(e)]);
  }
  return out;
}

}  // namespace rwise
