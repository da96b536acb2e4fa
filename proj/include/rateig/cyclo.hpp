#pragma once

// Roots of unity in exponent space.
//
// A root of unity of order dividing m is stored as its exponent e in Z/m, so
// zeta_m^e * zeta_m^f = zeta_m^(e+f).  Products of roots become sums of
// exponents and every identity is checked exactly; nothing here ever touches a
// complex number.  A RootSet is a subset of R(M) kept as a dense bitmap over
// Z/M.  Binary operations first rescale both operands to lcm(M1, M2).

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rateig {

/// Upper bound on any modulus a RootSet may carry.
inline constexpr std::uint32_t kMaxModulus = 1'000'000;
static_assert(kMaxModulus < (1u << 31), "exponent sums must fit in 32 bits");

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
std::uint32_t euler_phi(std::uint32_t m);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1 and m > 1.
std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t m);

/// Throws InvalidModulus for 0 and ModulusTooLarge above kMaxModulus.
void check_modulus(std::uint64_t m);

/// lcm of two moduli, checked against kMaxModulus.
std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b);

class RootExp {
 public:
  RootExp(std::uint32_t modulus, std::int64_t exponent);

  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t exponent() const noexcept { return exponent_; }

  /// m / gcd(e, m).
  std::uint32_t order() const noexcept;

  bool is_canonical() const noexcept;

  /// The same root written over its own order, e.g. zeta_9^3 -> zeta_3^1.
  RootExp canonical() const;

  /// Same root, exponent rescaled to a multiple of the current modulus.
  RootExp rescaled(std::uint32_t target_modulus) const;

  /// "ζ_m^e" with m minimal.
  std::string to_string() const;

  friend bool operator==(const RootExp& a, const RootExp& b) noexcept;

 private:
  std::uint32_t modulus_;
  std::uint32_t exponent_;
};

class RootSetBuilder;

class RootSet {
 public:
  /// Empty subset of R(modulus).
  explicit RootSet(std::uint32_t modulus);

  static RootSet from_residues(std::uint32_t modulus,
                               std::span<const std::uint32_t> residues);
  static RootSet from_residues(std::uint32_t modulus,
                               std::initializer_list<std::uint32_t> residues);

  std::uint32_t modulus() const noexcept { return modulus_; }
  bool contains(std::uint64_t residue) const noexcept;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  /// Ascending residues in [0, modulus).
  std::vector<std::uint32_t> residues() const;

  /// Contains the trivial root (residue 0).
  bool has_one() const noexcept { return contains(0); }
  /// Equal to R(modulus).
  bool is_full() const noexcept { return size() == modulus_; }

  /// Residue e becomes k*e at modulus k*M.  Injective.
  RootSet rescaled(std::uint32_t target_modulus) const;

  /// Smallest modulus M' | M such that the set lives in R(M').
  std::uint32_t minimal_modulus() const;

  /// "mod M: {e1,e2,...}".
  std::string to_string() const;

  /// Set equality of roots of unity; moduli may differ.
  friend bool operator==(const RootSet& a, const RootSet& b);

 private:
  friend class RootSetBuilder;
  std::uint32_t modulus_;
  std::vector<std::uint64_t> words_;
};

/// Mutable bitmap used while a RootSet is being assembled.
class RootSetBuilder {
 public:
  explicit RootSetBuilder(std::uint32_t modulus);

  std::uint32_t modulus() const noexcept { return set_.modulus_; }
  void insert(std::uint64_t residue);
  bool contains(std::uint64_t residue) const noexcept {
    return set_.contains(residue);
  }
  /// Adds every element of `other` (same modulus).
  void merge(const RootSet& other);
  /// Adds {e + shift : e in src} (same modulus).
  void merge_shifted(const RootSet& src, std::uint32_t shift);

  RootSet build() &&;

 private:
  RootSet set_;
};

RootSet all_roots(std::uint32_t m);
RootSet primitive_roots(std::uint32_t m);

/// {a + b} at modulus lcm.
RootSet product_set(const RootSet& a, const RootSet& b);
/// {-e}.
RootSet inverse_set(const RootSet& a);
/// {i * e : gcd(i, m) = 1}, equal to the rescaled Phi(order(r)).
RootSet galois_orbit(const RootExp& r);
/// {unit * e}; unit must be coprime to the modulus.
RootSet galois_image(const RootSet& a, std::uint32_t unit);
/// True iff the set is invariant under every unit of Z/M.
bool is_galois_closed(const RootSet& a);

RootSet rescale(const RootSet& s, std::uint32_t target_modulus);
RootSet set_union(const RootSet& a, const RootSet& b);
RootSet set_intersection(const RootSet& a, const RootSet& b);
RootSet set_difference(const RootSet& a, const RootSet& b);
/// R(M) minus a.
RootSet complement(const RootSet& a);
bool is_subset(const RootSet& a, const RootSet& b);

}  // namespace rateig
