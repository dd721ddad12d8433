#include "rwise/random.hpp"

#include <vector>

namespace rwise {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

Subset random_k_subset(std::mt19937_64& rng, int n, int k) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  Subset s;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + uniform_below(rng, static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    s.insert(pool[static_cast<std::size_t>(i)]);
  }
  return s;
}

}  // namespace rwise
