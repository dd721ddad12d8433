#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rwise {

/// Largest ground set we support. Elements are 1-based: 1..kMaxGround.
inline constexpr int kMaxGround = 128;

/// A subset of [n] stored as a 128-bit vector; element e lives at bit e-1.
/// Ordering is the numeric order of the bit vector, which is the canonical
/// member order of a Family.
class Subset {
 public:
  using word = unsigned __int128;

  constexpr Subset() = default;
  Subset(std::initializer_list<int> elements);
  explicit Subset(std::span<const int> elements);

  static constexpr Subset from_bits(word bits) {
    Subset s;
    s.bits_ = bits;
    return s;
  }
  /// {1, ..., m}; empty for m <= 0.
  static Subset prefix(int m);
  /// {lo, ..., hi}; empty when lo > hi.
  static Subset range(int lo, int hi);

  constexpr word bits() const { return bits_; }
  std::uint64_t low_word() const { return static_cast<std::uint64_t>(bits_); }
  std::uint64_t high_word() const { return static_cast<std::uint64_t>(bits_ >> 64); }

  int size() const {
    return std::popcount(low_word()) + std::popcount(high_word());
  }
  bool empty() const { return bits_ == 0; }
  bool contains(int e) const;
  void insert(int e);
  void erase(int e);
  /// Largest element, 0 if empty.
  int max_element() const;
  /// Smallest element, 0 if empty.
  int min_element() const;
  bool is_subset_of(const Subset& other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> elements() const;
  std::string to_string() const;

  friend constexpr Subset operator&(Subset a, Subset b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return from_bits(a.bits_ & ~b.bits_); }
  Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(Subset a, Subset b) { return a.bits_ == b.bits_; }
  friend constexpr std::strong_ordering operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  word bits_ = 0;
};

using KSet = Subset;

inline int intersection_size(const Subset& a, const Subset& b) { return (a & b).size(); }

struct SubsetHash {
  std::size_t operator()(const Subset& s) const noexcept {
    std::uint64_t h = s.low_word() * 0x9E3779B97F4A7C15ull;
    h ^= s.high_word() + 0x7F4A7C159E3779B9ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Number of k-subsets of an m-set, saturating at UINT64_MAX.
std::uint64_t choose_u64(int m, int k);

/// Visits every k-subset of `pool` in increasing bit-vector order. Stops early
/// when the visitor returns false. Returns false iff stopped early.
bool for_each_k_subset(Subset pool, int k, const std::function<bool(const Subset&)>& visit);

/// Visits every k-subset of [n] in increasing bit-vector order (Gosper's hack).
bool for_each_k_subset(int n, int k, const std::function<bool(const Subset&)>& visit);

/// All k-subsets of `pool`, in increasing bit-vector order.
std::vector<Subset> k_subsets(Subset pool, int k);

/// Applies a relabeling: perm[e] is the image of element e (perm[0] unused).
Subset relabel(const Subset& s, std::span<const int> perm);

}  // namespace rwise
