#pragma once

// Derived subsets of R(m) built from the primitive roots Phi(m), m odd:
//
//   Lambda_i(m)   products of i distinct elements of Phi(m)
//   Lambda*_3(m)  eta1 * eta2 / eta3 for distinct eta's
//   Delta(m)      products of phi(m)/2 elements, one from each pair {eta, 1/eta}
//
// Each comes with an exhaustive construction that uses no structure of the
// answer, and where one exists a closed form.  The exhaustive side is the
// reference; the closed forms are what gets checked against it.

#include <cstdint>
#include <utility>
#include <vector>

#include "rateig/cyclo.hpp"

namespace rateig {

enum class Method { brute, closed };

struct LambdaResult {
  std::uint32_t m;
  std::uint32_t arity;
  RootSet value;
  Method method;
};

struct DeltaResult {
  std::uint32_t m;
  RootSet value;
  Method method;
};

/// Reachability over (number chosen, exponent sum) across Phi(m); every
/// selection of `i` distinct primitive roots is accounted for.
/// Requires m odd, m >= 3, 1 <= i <= phi(m).
RootSet lambda_brute(std::uint32_t m, std::uint32_t i);

/// lambda_brute(m, i) for every i in [0, phi(m)] from a single pass.
std::vector<RootSet> lambda_brute_all(std::uint32_t m);

/// Closed form for m odd > 3: Phi(m) at i = 1 and i = phi(m)-1, {1} at
/// i = phi(m), otherwise R(m) except R(m)\{1} when i is odd and m is 5, 9
/// or 15.  m = 3 is answered by lambda_brute.
RootSet lambda_closed(std::uint32_t m, std::uint32_t i);

LambdaResult lambda(std::uint32_t m, std::uint32_t i, Method method);

/// All eta1 + eta2 - eta3 over ordered triples of distinct primitive
/// residues.  Requires m odd > 3.
RootSet lambda3_star(std::uint32_t m);

/// The phi(m)/2 pairs {e, m-e} partitioning Phi(m), smallest member first,
/// ordered by it.  Requires m odd > 1.
std::vector<std::pair<RootExp, RootExp>> inverse_pairs(std::uint32_t m);

/// Every choice of one member per inverse pair (2^(phi(m)/2) choices).
RootSet delta_brute(std::uint32_t m);

/// R(m)\{1} for m in {3, 5, 9}, R(m) otherwise.  Requires m odd > 1.
RootSet delta_closed(std::uint32_t m);

DeltaResult delta(std::uint32_t m, Method method);

/// Largest phi(m)/2 delta_brute will enumerate.
inline constexpr std::uint32_t kMaxDeltaPairs = 28;

}  // namespace rateig
