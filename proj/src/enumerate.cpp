#include "rateig/enumerate.hpp"

#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "rateig/error.hpp"

namespace rateig {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using u128 = unsigned __int128;
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

void walk_combinations(std::span<const std::uint32_t> values, std::size_t start,
                       std::size_t remaining, std::uint64_t sum, std::uint32_t modulus,
                       RootSetBuilder& out) {
  if (remaining == 0) {
    out.insert(sum);
    return;
  }
  for (std::size_t j = start; j + remaining <= values.size(); ++j) {
    walk_combinations(values, j + 1, remaining - 1, (sum + values[j]) % modulus, modulus, out);
  }
}

}  // namespace

RootSet combination_sums(std::span<const std::uint32_t> values, std::size_t k,
                         std::uint32_t modulus) {
  if (k > values.size()) {
    throw Error(ErrorCode::OutOfRange, "cannot choose " + std::to_string(k) + " of " +
                                           std::to_string(values.size()) + " positions");
  }
  if (binomial_saturating(values.size(), k) > kMaxCombinations) {
    throw Error(ErrorCode::EnumerationLimit,
                "C(" + std::to_string(values.size()) + ", " + std::to_string(k) +
                    ") exceeds the combination limit");
  }
  RootSetBuilder out(modulus);
  walk_combinations(values, 0, k, 0, modulus, out);
  return std::move(out).build();
}

RootSet sign_sums(std::span<const std::uint32_t> values, std::uint32_t modulus,
                  std::uint32_t max_positions) {
  const std::size_t n = values.size();
  if (n > max_positions) {
    throw Error(ErrorCode::EnumerationLimit, std::to_string(n) + " sign positions exceed limit " +
                                                 std::to_string(max_positions));
  }
  const std::uint64_t m = modulus;
  std::vector<std::uint64_t> v(values.begin(), values.end());
  for (auto& x : v) x %= m;
  // Start from all signs negative, then flip one sign per step.
  std::uint64_t sum = 0;
  for (std::uint64_t x : v) sum = (sum + m - x) % m;
  std::uint64_t plus = 0;
  RootSetBuilder out(modulus);
  out.insert(sum);
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const int j = std::countr_zero(i);
    const std::uint64_t twice = (2 * v[j]) % m;
    plus ^= std::uint64_t{1} << j;
    sum = (plus >> j) & 1u ? (sum + twice) % m : (sum + m - twice) % m;
    out.insert(sum);
  }
  return std::move(out).build();
}

}  // namespace rateig
