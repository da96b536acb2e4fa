#include "rateig/elements.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "rateig/error.hpp"

namespace rateig {

char family_letter(Family f) noexcept {
  switch (f) {
    case Family::A: return 'a';
    case Family::B: return 'b';
    case Family::C: return 'c';
  }
  return '?';
}

std::uint32_t GroupTag::rank() const noexcept { return family == Family::A ? n - 1 : n; }

std::uint32_t GroupTag::natural_dimension() const noexcept {
  switch (family) {
    case Family::A: return n;
    case Family::B: return 2 * n + 1;
    case Family::C: return 2 * n;
  }
  return 0;
}

GroupTag make_group(Family family, std::uint32_t n) {
  const std::uint32_t least = family == Family::B ? 3 : 2;
  if (n < least) {
    throw Error(ErrorCode::InvalidGroup, std::string(1, family_letter(family)) + " needs n >= " +
                                             std::to_string(least) + ", got " +
                                             std::to_string(n));
  }
  if (n > 100'000) throw Error(ErrorCode::InvalidGroup, "n too large");
  return {family, n};
}

SemisimpleElement build_element(GroupTag group, std::vector<OrbitBlock> blocks,
                                std::uint32_t trivial_count) {
  group = make_group(group.family, group.n);
  for (const OrbitBlock& b : blocks) {
    if (b.m % 2 == 0) {
      throw Error(ErrorCode::EvenOrder, "orbit order " + std::to_string(b.m) + " is even");
    }
    if (b.m < 3) throw Error(ErrorCode::InvalidModulus, "orbit order must be > 1");
    check_modulus(b.m);
    if (b.count == 0) throw Error(ErrorCode::OutOfRange, "orbit multiplicity must be positive");
  }
  if (group.family == Family::C && trivial_count % 2 != 0) {
    throw Error(ErrorCode::ParityViolation,
                "symplectic element needs an even number of eigenvalues 1, got " +
                    std::to_string(trivial_count));
  }
  if (group.family == Family::B && trivial_count % 2 == 0) {
    throw Error(ErrorCode::ParityViolation,
                "orthogonal element of odd dimension needs an odd number of eigenvalues 1, got " +
                    std::to_string(trivial_count));
  }

  std::sort(blocks.begin(), blocks.end());
  std::vector<OrbitBlock> merged;
  for (const OrbitBlock& b : blocks) {
    if (!merged.empty() && merged.back().m == b.m) {
      merged.back().count += b.count;
    } else {
      merged.push_back(b);
    }
  }

  std::uint64_t dim = trivial_count;
  std::uint32_t order = 1;
  for (const OrbitBlock& b : merged) {
    dim += static_cast<std::uint64_t>(b.count) * euler_phi(b.m);
    order = common_modulus(order, b.m);
  }
  if (dim != group.natural_dimension()) {
    throw Error(ErrorCode::DimensionMismatch,
                "eigenvalues account for dimension " + std::to_string(dim) + ", expected " +
                    std::to_string(group.natural_dimension()));
  }

  SemisimpleElement g;
  g.group_ = group;
  g.blocks_ = std::move(merged);
  g.trivial_ = trivial_count;
  g.order_ = order;
  return g;
}

std::uint32_t element_order(const SemisimpleElement& g) noexcept { return g.order(); }

std::vector<std::uint32_t> SemisimpleElement::diagonal() const {
  std::vector<std::uint32_t> out;
  out.reserve(group_.natural_dimension());
  for (const OrbitBlock& b : blocks_) {
    const std::uint32_t scale = order_ / b.m;
    for (std::uint32_t c = 0; c < b.count; ++c) {
      for (std::uint32_t e = 1; e < b.m; ++e) {
        if (std::gcd(e, b.m) == 1) out.push_back(e * scale);
      }
    }
  }
  out.insert(out.end(), trivial_, 0u);
  return out;
}

std::vector<std::uint32_t> SemisimpleElement::top_half() const {
  if (group_.family == Family::A) {
    throw Error(ErrorCode::Unsupported, "top_half is defined for families B and C");
  }
  std::vector<std::uint32_t> out;
  out.reserve(group_.n);
  for (const OrbitBlock& b : blocks_) {
    const std::uint32_t scale = order_ / b.m;
    for (std::uint32_t c = 0; c < b.count; ++c) {
      for (std::uint32_t e = 1; 2 * e < b.m; ++e) {
        if (std::gcd(e, b.m) == 1) out.push_back(e * scale);
      }
    }
  }
  out.insert(out.end(), trivial_ / 2, 0u);
  return out;
}

std::vector<RootExp> diagonal_roots(const SemisimpleElement& g) {
  std::vector<RootExp> out;
  for (std::uint32_t e : g.diagonal()) out.emplace_back(g.order(), e);
  return out;
}

namespace {

// Multiplicity of each root, keyed by (order, exponent over that order).
std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> tally(
    std::span<const RootExp> diagonal) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> counts;
  for (const RootExp& r : diagonal) {
    const RootExp c = r.canonical();
    ++counts[{c.modulus(), c.exponent()}];
  }
  return counts;
}

}  // namespace

bool is_rational(std::span<const RootExp> diagonal) {
  const auto counts = tally(diagonal);
  std::map<std::uint32_t, std::size_t> per_order;
  for (const auto& [key, count] : counts) {
    const auto [it, fresh] = per_order.emplace(key.first, count);
    if (!fresh && it->second != count) return false;
  }
  std::map<std::uint32_t, std::size_t> distinct;
  for (const auto& [key, count] : counts) ++distinct[key.first];
  for (const auto& [order, n] : distinct) {
    if (n != euler_phi(order)) return false;
  }
  return true;
}

bool is_real(std::span<const RootExp> diagonal) {
  const auto counts = tally(diagonal);
  for (const auto& [key, count] : counts) {
    const auto [m, e] = key;
    const auto inv = counts.find({m, (m - e) % m});
    if (inv == counts.end() || inv->second != count) return false;
  }
  return true;
}

namespace {

void require_symplectic(const SemisimpleElement& g) {
  if (g.group().family != Family::C) {
    throw Error(ErrorCode::InvalidGroup, "block decomposition over GF(2) needs family c");
  }
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u) acc = acc * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return acc;
}

}  // namespace

std::vector<F2Block> f2_block_decomposition(const SemisimpleElement& g) {
  require_symplectic(g);
  std::vector<F2Block> out;
  for (const OrbitBlock& b : g.blocks()) {
    const std::uint32_t e = multiplicative_order(2, b.m);
    const std::uint32_t phi = euler_phi(b.m);
    const bool self_dual = e % 2 == 0 && pow_mod(2, e / 2, b.m) == b.m - 1;
    const F2Block block = self_dual ? F2Block{e / 2, b.m, F2Kind::irreducible}
                                    : F2Block{e, b.m, F2Kind::split_pair};
    const std::uint32_t per_orbit = self_dual ? phi / e : phi / (2 * e);
    out.insert(out.end(), static_cast<std::size_t>(per_orbit) * b.count, block);
  }
  return out;
}

std::vector<F2Block> singular_indices(const SemisimpleElement& g) {
  const std::vector<F2Block> blocks = f2_block_decomposition(g);
  std::vector<F2Block> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const F2Block& b = blocks[i];
    if (b.kind != F2Kind::irreducible || b.d >= 32) continue;
    if (b.m != (std::uint64_t{1} << b.d) + 1) continue;
    bool coprime = true;
    for (std::size_t j = 0; j < blocks.size() && coprime; ++j) {
      if (j != i && std::gcd(b.m, blocks[j].m) != 1) coprime = false;
    }
    if (coprime) out.push_back(b);
  }
  return out;
}

std::uint32_t si(const SemisimpleElement& g) {
  return static_cast<std::uint32_t>(singular_indices(g).size());
}

}  // namespace rateig
