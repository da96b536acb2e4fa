#pragma once

// Rational semisimple elements of odd order in SL_n, Sp_2n and Spin_2n+1,
// described by their eigenvalues on the natural module.
//
// Such an element is a multiset of full Galois orbits Phi(m), m odd > 1, plus
// some number k of eigenvalues equal to 1.  That normal form is the only one
// the constructors accept; raw diagonals are only looked at by the
// is_rational / is_real predicates.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rateig/cyclo.hpp"

namespace rateig {

enum class Family { A, B, C };

char family_letter(Family f) noexcept;

/// A: SL_n (rank n-1, natural dim n).  B: Spin_2n+1 (rank n, dim 2n+1).
/// C: Sp_2n (rank n, dim 2n).
struct GroupTag {
  Family family;
  std::uint32_t n;

  std::uint32_t rank() const noexcept;
  std::uint32_t natural_dimension() const noexcept;

  friend bool operator==(const GroupTag&, const GroupTag&) = default;
};

/// Validates n (A, C: n >= 2; B: n >= 3).  Throws InvalidGroup.
GroupTag make_group(Family family, std::uint32_t n);

struct OrbitBlock {
  std::uint32_t m;
  std::uint32_t count;

  friend auto operator<=>(const OrbitBlock&, const OrbitBlock&) = default;
};

class SemisimpleElement {
 public:
  const GroupTag& group() const noexcept { return group_; }
  /// Sorted by m, one entry per distinct m.
  const std::vector<OrbitBlock>& blocks() const noexcept { return blocks_; }
  std::uint32_t trivial_count() const noexcept { return trivial_; }
  /// lcm of the block orders, 1 for the identity.
  std::uint32_t order() const noexcept { return order_; }

  /// Eigenvalue exponents on the natural module at modulus order(), block
  /// by block in ascending m, trivial entries last.
  std::vector<std::uint32_t> diagonal() const;

  /// For B and C: one exponent from each pair {x, x^-1} of the diagonal
  /// (B leaves out its extra fixed entry).  n entries.
  std::vector<std::uint32_t> top_half() const;

  friend bool operator==(const SemisimpleElement&, const SemisimpleElement&) = default;

 private:
  friend SemisimpleElement build_element(GroupTag, std::vector<OrbitBlock>, std::uint32_t);
  GroupTag group_{Family::A, 2};
  std::vector<OrbitBlock> blocks_;
  std::uint32_t trivial_ = 0;
  std::uint32_t order_ = 1;
};

/// Checks, in order: every m odd (EvenOrder) and > 1, counts positive,
/// parity of k (ParityViolation: C needs k even, B needs k odd), then
/// sum count*phi(m) + k == natural dimension (DimensionMismatch).  Blocks
/// with equal m are merged.
SemisimpleElement build_element(GroupTag group, std::vector<OrbitBlock> blocks,
                                std::uint32_t trivial_count);

std::uint32_t element_order(const SemisimpleElement& g) noexcept;

/// Union of full Galois orbits with one multiplicity per orbit.
bool is_rational(std::span<const RootExp> diagonal);
/// Equal, as a multiset, to its inverse.
bool is_real(std::span<const RootExp> diagonal);

/// Diagonal() as RootExp values.
std::vector<RootExp> diagonal_roots(const SemisimpleElement& g);

enum class F2Kind { irreducible, split_pair };

/// A minimal non-degenerate g-stable subspace of dimension 2d over GF(2).
struct F2Block {
  std::uint32_t d;
  std::uint32_t m;
  F2Kind kind;

  friend bool operator==(const F2Block&, const F2Block&) = default;
};

/// Per orbit copy: with e the order of 2 mod m, φ(m)/e irreducible blocks of
/// half-dimension e/2 when 2^(e/2) = -1 mod m, else φ(m)/(2e) split pairs
/// of half-dimension e.  Family C only.
std::vector<F2Block> f2_block_decomposition(const SemisimpleElement& g);

/// Irreducible blocks with m = 2^d + 1 whose order is coprime to the order
/// of every other block, other copies of the same orbit included.
std::vector<F2Block> singular_indices(const SemisimpleElement& g);

/// Number of singular blocks.
std::uint32_t si(const SemisimpleElement& g);

}  // namespace rateig
