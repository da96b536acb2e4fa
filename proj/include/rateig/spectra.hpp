#pragma once

// Eigenvalue sets E(rho_w(g)) of rational odd-order elements, as RootSets at
// modulus |g|.  Multiplicities are never tracked.
//
// Supported highest weights:
//   Fund(i)            w_i
//   SumTwoFund(i, j)   w_i + w_j for the shapes listed at spectrum_sum_two
//   TwistedProduct     w = sum p^(k_t) mu_t with each mu_t a Fund or
//                      SumTwoFund; for rational g the twists do not change
//                      the spectrum, which is the product of the factors'.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rateig/cyclo.hpp"
#include "rateig/elements.hpp"

namespace rateig {

struct Fund {
  std::uint32_t i;
  friend bool operator==(const Fund&, const Fund&) = default;
};

/// Stored with i <= j.
struct SumTwoFund {
  std::uint32_t i;
  std::uint32_t j;
  friend bool operator==(const SumTwoFund&, const SumTwoFund&) = default;
};

using BaseShape = std::variant<Fund, SumTwoFund>;

struct TwistedProduct {
  std::vector<BaseShape> factors;
  friend bool operator==(const TwistedProduct&, const TwistedProduct&) = default;
};

using Shape = std::variant<Fund, SumTwoFund, TwistedProduct>;

struct WeightSpec {
  Shape shape;
  GroupTag group;
  std::uint32_t characteristic = 0;
};

/// Which closed description a spin spectrum matches.
///   Full:      R(|g|)
///   Case2(m):  (R(m)\1) R(|g|/m), m in {3,5,9}, gcd(m, |g|/m) = 1
///   Case3(m):  (R(m)\1) Phi(5) R(|g|/5m), m in {3,9}, gcd(5m, |g|/5m) = 1
struct SpinCase {
  enum class Kind { full, case2, case3 };
  Kind kind;
  std::uint32_t m = 0;

  std::string to_string() const;
  friend bool operator==(const SpinCase&, const SpinCase&) = default;
};

struct Spectrum {
  RootSet values;
  /// False when `values` is only a subset of the true spectrum; then only
  /// has_one() == true carries information.
  bool exact = true;
  std::optional<SpinCase> spin_case{};

  std::uint32_t modulus() const noexcept { return values.modulus(); }
};

bool has_eigenvalue_one(const Spectrum& s) noexcept;

/// Natural module: the diagonal as a set.
Spectrum spectrum_natural(const SemisimpleElement& g);

/// i-th exterior power of the natural module, family A, 1 <= i <= n-1.
Spectrum spectrum_exterior(const SemisimpleElement& g, std::uint32_t i);

/// Family A:
///   (1, n-1)  {d_i - d_j : i != j}
///   (2, n-1)  {d_i + d_j - d_k : i, j, k distinct}
///   (1, 2)    {2 d_i + d_j : i != j}
///   (1, 4)    {2 d_i + d_j + d_k + d_l : i, j, k, l distinct}
/// Family B: (1, n) natural * spin; (2, n) lower bound of w_2 times spin
/// (inexact).  Family C: (1, 1) natural * natural when p != 2; (1, n)
/// natural * exterior_n when p != 2.  Anything else is UnsupportedShape.
Spectrum spectrum_sum_two(const SemisimpleElement& g, SumTwoFund shape, std::uint32_t p);

/// Family C: the i-th exterior power of the 2n-dimensional diagonal.  Throws
/// Unsupported for (i, p) = (n, 2); use sp2_eig1_absent there.
Spectrum spectrum_sp_fund(const SemisimpleElement& g, std::uint32_t i, std::uint32_t p);

/// Family B spin module: every +-d_1 +- ... +- d_n over the top half of the
/// diagonal.  The result carries the matching SpinCase, if any.
Spectrum spectrum_spin_brute(const SemisimpleElement& g);

/// Family B spin module as the product of Delta(m) over the orbits, with
/// Delta(m) in closed form.
Spectrum spectrum_spin_closed(const SemisimpleElement& g);

/// Family B, w_2: {+-d_i +- d_j : i < j} together with 1.  Inexact.
Spectrum spectrum_b_fund2_lower_bound(const SemisimpleElement& g);

/// Product of the factor spectra.
Spectrum twisted_product_spectrum(const SemisimpleElement& g, std::span<const BaseShape> factors,
                                  std::uint32_t p);

/// Spectrum of any supported (g, shape, p).  Rejects p that is neither 0 nor
/// prime and p dividing |g|.
Spectrum spectrum_of(const SemisimpleElement& g, const Shape& shape, std::uint32_t p);

/// Label of a spin spectrum at modulus |g| if it matches one of the closed
/// descriptions, checked in the order Full, Case2(3,5,9), Case3(3,9).
std::optional<SpinCase> match_spin_case(const RootSet& s);

/// Exact description of a spin case as a set at modulus `order`.
RootSet spin_case_set(const SpinCase& c, std::uint32_t order);

/// delta(nu) for w' = a_1 w_1 + ... + a_{n-1} w_{n-1}: every base-2 digit
/// of a_j adds to b_j, and delta(nu) = sum b_j * j.
std::uint64_t delta_nu(std::span<const std::uint32_t> coeffs);

/// Family C, p = 2, coefficients (a_1, ..., a_n) with a_n != 0: eigenvalue 1
/// is absent iff delta(nu) < Si(g).  Throws OutOfRange when a_n = 0.
bool sp2_eig1_absent(const SemisimpleElement& g, std::span<const std::uint32_t> coeffs);

/// Coefficient vectors (a_1, ..., a_rank), one per factor of the shape (a
/// single one for Fund and SumTwoFund).
std::vector<std::vector<std::uint32_t>> factor_coefficients(const Shape& shape,
                                                            std::uint32_t rank);

/// sp2_eig1_absent for a shape.  Twisted factors sit at distinct powers of 2
/// far enough apart that their digits never meet, so delta(nu) is the sum of
/// the factors' values.  The total a_n must be nonzero.
bool sp2_eig1_absent(const SemisimpleElement& g, const Shape& shape);

}  // namespace rateig
