#pragma once

// Exhaustive exponent-sum walks shared by the lambda and spectra modules.

#include <cstdint>
#include <span>

#include "rateig/cyclo.hpp"

namespace rateig {

/// Largest C(n, k) a combination walk will visit.
inline constexpr std::uint64_t kMaxCombinations = 100'000'000;
/// Largest number of positions a sign walk will flip (2^n sums).
inline constexpr std::uint32_t kMaxSignPositions = 24;

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

/// { values[j1] + ... + values[jk] mod M : j1 < ... < jk }.  Positions are
/// distinct, values may repeat.  Visits every combination once with a running
/// sum.  Throws EnumerationLimit above kMaxCombinations.
RootSet combination_sums(std::span<const std::uint32_t> values, std::size_t k,
                         std::uint32_t modulus);

/// { +-values[0] +- ... +- values[n-1] mod M } over all 2^n sign vectors,
/// walked in Gray-code order.  Throws EnumerationLimit when n > max_positions.
RootSet sign_sums(std::span<const std::uint32_t> values, std::uint32_t modulus,
                  std::uint32_t max_positions = kMaxSignPositions);

}  // namespace rateig
