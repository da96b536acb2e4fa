#include "rateig/lambda.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rateig/enumerate.hpp"
#include "rateig/error.hpp"

namespace rateig {

namespace {

void require_odd(std::uint32_t m, std::uint32_t lower, const char* what) {
  check_modulus(m);
  if (m % 2 == 0) {
    throw Error(ErrorCode::InvalidModulus, std::string(what) + ": modulus " + std::to_string(m) +
                                               " is even");
  }
  if (m < lower) {
    throw Error(ErrorCode::InvalidModulus, std::string(what) + ": modulus must be at least " +
                                               std::to_string(lower));
  }
}

void require_arity(std::uint32_t m, std::uint32_t i) {
  const std::uint32_t phi = euler_phi(m);
  if (i < 1 || i > phi) {
    throw Error(ErrorCode::OutOfRange, "arity " + std::to_string(i) + " outside [1, " +
                                           std::to_string(phi) + "] for m=" + std::to_string(m));
  }
}

bool is_exceptional_modulus(std::uint32_t m) { return m == 5 || m == 9 || m == 15; }

RootSet punctured(std::uint32_t m) {
  RootSetBuilder b(m);
  for (std::uint32_t e = 1; e < m; ++e) b.insert(e);
  return std::move(b).build();
}

}  // namespace

namespace {

// reach[c] = exponent sums of c distinct residues among those seen so far.
std::vector<RootSet> reachable_sums(std::uint32_t m, std::uint32_t max_arity) {
  std::vector<RootSet> reach(max_arity + 1, RootSet(m));
  reach[0] = RootSet::from_residues(m, {0});
  std::uint32_t seen = 0;
  for (std::uint32_t e : primitive_roots(m).residues()) {
    ++seen;
    for (std::uint32_t c = std::min(max_arity, seen); c >= 1; --c) {
      if (reach[c - 1].empty()) continue;
      RootSetBuilder next(m);
      next.merge(reach[c]);
      next.merge_shifted(reach[c - 1], e);
      reach[c] = std::move(next).build();
    }
  }
  return reach;
}

}  // namespace

RootSet lambda_brute(std::uint32_t m, std::uint32_t i) {
  require_odd(m, 3, "lambda");
  require_arity(m, i);
  return reachable_sums(m, i)[i];
}

std::vector<RootSet> lambda_brute_all(std::uint32_t m) {
  require_odd(m, 3, "lambda");
  return reachable_sums(m, euler_phi(m));
}

RootSet lambda_closed(std::uint32_t m, std::uint32_t i) {
  require_odd(m, 3, "lambda");
  require_arity(m, i);
  if (m == 3) return lambda_brute(m, i);
  const std::uint32_t phi = euler_phi(m);
  if (i == 1 || i + 1 == phi) return primitive_roots(m);
  if (i == phi) return RootSet::from_residues(m, {0});
  if (i % 2 == 1 && is_exceptional_modulus(m)) return punctured(m);
  return all_roots(m);
}

LambdaResult lambda(std::uint32_t m, std::uint32_t i, Method method) {
  RootSet value = method == Method::brute ? lambda_brute(m, i) : lambda_closed(m, i);
  return {m, i, std::move(value), method};
}

RootSet lambda3_star(std::uint32_t m) {
  require_odd(m, 5, "lambda3_star");
  const std::vector<std::uint32_t> phi = primitive_roots(m).residues();
  RootSetBuilder out(m);
  for (std::uint32_t a : phi) {
    for (std::uint32_t b : phi) {
      if (b == a) continue;
      for (std::uint32_t c : phi) {
        if (c == a || c == b) continue;
        out.insert((static_cast<std::uint64_t>(a) + b + m - c) % m);
      }
    }
  }
  return std::move(out).build();
}

std::vector<std::pair<RootExp, RootExp>> inverse_pairs(std::uint32_t m) {
  require_odd(m, 3, "inverse_pairs");
  std::vector<std::pair<RootExp, RootExp>> pairs;
  for (std::uint32_t e = 1; 2 * e < m; ++e) {
    if (std::gcd(e, m) == 1) pairs.emplace_back(RootExp(m, e), RootExp(m, m - e));
  }
  return pairs;
}

RootSet delta_brute(std::uint32_t m) {
  require_odd(m, 3, "delta");
  std::vector<std::uint32_t> reps;
  for (const auto& [lo, hi] : inverse_pairs(m)) reps.push_back(lo.exponent());
  // Picking lo or hi = -lo from each pair is a choice of sign on lo.
  return sign_sums(reps, m, kMaxDeltaPairs);
}

RootSet delta_closed(std::uint32_t m) {
  require_odd(m, 3, "delta");
  if (m == 3 || m == 5 || m == 9) return punctured(m);
  return all_roots(m);
}

DeltaResult delta(std::uint32_t m, Method method) {
  RootSet value = method == Method::brute ? delta_brute(m) : delta_closed(m);
  return {m, std::move(value), method};
}

}  // namespace rateig
