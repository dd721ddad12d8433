#pragma once

#include <cstdint>
#include <random>

#include "rwise/subset.hpp"

namespace rwise {

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform in [0, bound) by rejection sampling. The standard distributions are
/// implementation-defined, which would make seeded output differ between
/// standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniform k-subset of [n] (partial Fisher-Yates).
Subset random_k_subset(std::mt19937_64& rng, int n, int k);

}  // namespace rwise
