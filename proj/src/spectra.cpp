#include "rateig/spectra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "rateig/enumerate.hpp"
#include "rateig/error.hpp"
#include "rateig/lambda.hpp"

namespace rateig {

std::string SpinCase::to_string() const {
  switch (kind) {
    case Kind::full: return "Full";
    case Kind::case2: return "Case2(" + std::to_string(m) + ")";
    case Kind::case3: return "Case3(" + std::to_string(m) + ")";
  }
  return "?";
}

bool has_eigenvalue_one(const Spectrum& s) noexcept { return s.values.has_one(); }

namespace {

void require_family(const SemisimpleElement& g, Family f, const char* what) {
  if (g.group().family != f) {
    throw Error(ErrorCode::InvalidGroup, std::string(what) + " needs family " + family_letter(f) +
                                             ", got " + family_letter(g.group().family));
  }
}

std::string shape_text(SumTwoFund s) {
  return "sum:" + std::to_string(s.i) + "," + std::to_string(s.j);
}

[[noreturn]] void refuse(const SemisimpleElement& g, const std::string& shape) {
  throw Error(ErrorCode::UnsupportedShape, "weight " + shape + " is not supported for family " +
                                               family_letter(g.group().family) +
                                               " with n=" + std::to_string(g.group().n));
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

void check_characteristic(const SemisimpleElement& g, std::uint32_t p) {
  if (p == 0) return;
  if (!is_prime(p)) {
    throw Error(ErrorCode::OutOfRange, "characteristic " + std::to_string(p) + " is not prime");
  }
  if (g.order() % p == 0) {
    throw Error(ErrorCode::OutOfRange, "characteristic " + std::to_string(p) +
                                           " divides |g|=" + std::to_string(g.order()));
  }
}

RootSet set_of(std::span<const std::uint32_t> values, std::uint32_t modulus) {
  RootSetBuilder b(modulus);
  for (std::uint32_t v : values) b.insert(v);
  return std::move(b).build();
}

RootSet punctured(std::uint32_t m) {
  return set_difference(all_roots(m), RootSet::from_residues(m, {0}));
}

// {2 d_i + sum of k others at distinct positions, all different from i}, or
// with coefficient -1 on d_i when `lead` is M-1.
RootSet lead_plus_others(std::span<const std::uint32_t> d, std::uint64_t lead, std::size_t k,
                         std::uint32_t modulus) {
  RootSetBuilder out(modulus);
  std::vector<std::uint32_t> rest;
  for (std::size_t i = 0; i < d.size(); ++i) {
    rest.clear();
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (j != i) rest.push_back(d[j]);
    }
    const std::uint32_t shift = static_cast<std::uint32_t>(lead * d[i] % modulus);
    out.merge_shifted(combination_sums(rest, k, modulus), shift);
  }
  return std::move(out).build();
}

}  // namespace

Spectrum spectrum_natural(const SemisimpleElement& g) {
  const std::vector<std::uint32_t> d = g.diagonal();
  return {set_of(d, g.order())};
}

Spectrum spectrum_exterior(const SemisimpleElement& g, std::uint32_t i) {
  require_family(g, Family::A, "exterior power");
  if (i < 1 || i > g.group().rank()) {
    throw Error(ErrorCode::OutOfRange, "exterior arity " + std::to_string(i) + " outside [1, " +
                                           std::to_string(g.group().rank()) + "]");
  }
  const std::vector<std::uint32_t> d = g.diagonal();
  return {combination_sums(d, i, g.order())};
}

Spectrum spectrum_sp_fund(const SemisimpleElement& g, std::uint32_t i, std::uint32_t p) {
  require_family(g, Family::C, "symplectic fundamental weight");
  const std::uint32_t n = g.group().n;
  if (i < 1 || i > n) {
    throw Error(ErrorCode::OutOfRange,
                "fundamental weight " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
  }
  if (i == n && p == 2) {
    throw Error(ErrorCode::Unsupported,
                "fund:" + std::to_string(n) + " of c:" + std::to_string(2 * n) +
                    " in characteristic 2 has no weight-set description");
  }
  const std::vector<std::uint32_t> d = g.diagonal();
  return {combination_sums(d, i, g.order())};
}

Spectrum spectrum_spin_brute(const SemisimpleElement& g) {
  require_family(g, Family::B, "spin module");
  const std::vector<std::uint32_t> top = g.top_half();
  Spectrum s{sign_sums(top, g.order())};
  s.spin_case = match_spin_case(s.values);
  return s;
}

Spectrum spectrum_spin_closed(const SemisimpleElement& g) {
  require_family(g, Family::B, "spin module");
  const std::uint32_t order = g.order();
  RootSet acc = RootSet::from_residues(order, {0});
  for (const OrbitBlock& b : g.blocks()) {
    const RootSet delta = delta_closed(b.m);
    for (std::uint32_t c = 0; c < b.count; ++c) {
      if (acc.is_full()) break;
      acc = rescale(product_set(acc, delta), order);
    }
  }
  Spectrum s{std::move(acc)};
  s.spin_case = match_spin_case(s.values);
  return s;
}

Spectrum spectrum_b_fund2_lower_bound(const SemisimpleElement& g) {
  require_family(g, Family::B, "w_2 lower bound");
  const std::vector<std::uint32_t> top = g.top_half();
  const std::uint64_t m = g.order();
  RootSetBuilder b(g.order());
  b.insert(0);
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      const std::uint64_t x = top[i];
      const std::uint64_t y = top[j];
      b.insert(x + y);
      b.insert(x + m - y);
      b.insert(m - x + y);
      b.insert(2 * m - x - y);
    }
  }
  return {std::move(b).build(), false};
}

Spectrum spectrum_sum_two(const SemisimpleElement& g, SumTwoFund shape, std::uint32_t p) {
  if (shape.i > shape.j) std::swap(shape.i, shape.j);
  const GroupTag& grp = g.group();
  const std::uint32_t n = grp.n;
  const std::uint32_t rank = grp.rank();
  if (shape.i < 1 || shape.j > rank) refuse(g, shape_text(shape));
  const std::uint32_t order = g.order();

  switch (grp.family) {
    case Family::A: {
      const std::vector<std::uint32_t> d = g.diagonal();
      if (shape.i == 1 && shape.j == n - 1) {
        return {lead_plus_others(d, order - 1, 1, order)};
      }
      if (shape.i == 2 && shape.j == n - 1) {
        // d_i + d_j - d_k: the negated position leads.
        return {lead_plus_others(d, order - 1, 2, order)};
      }
      if (shape.i == 1 && shape.j == 2) return {lead_plus_others(d, 2, 1, order)};
      if (shape.i == 1 && shape.j == 4) return {lead_plus_others(d, 2, 3, order)};
      break;
    }
    case Family::B: {
      if (p == 2) break;
      if (shape.i == 1 && shape.j == n) {
        const Spectrum spin = spectrum_spin_brute(g);
        return {rescale(product_set(spectrum_natural(g).values, spin.values), order)};
      }
      if (shape.i == 2 && shape.j == n) {
        const Spectrum spin = spectrum_spin_brute(g);
        return {rescale(product_set(spectrum_b_fund2_lower_bound(g).values, spin.values), order),
                false};
      }
      break;
    }
    case Family::C: {
      if (p == 2) break;
      const RootSet natural = spectrum_natural(g).values;
      if (shape.i == 1 && shape.j == 1) return {rescale(product_set(natural, natural), order)};
      if (shape.i == 1 && shape.j == n) {
        return {rescale(product_set(natural, spectrum_sp_fund(g, n, p).values), order)};
      }
      break;
    }
  }
  refuse(g, shape_text(shape) + (p == 2 ? " in characteristic 2" : ""));
}

namespace {

Spectrum base_spectrum(const SemisimpleElement& g, const BaseShape& shape, std::uint32_t p) {
  if (const auto* s = std::get_if<SumTwoFund>(&shape)) return spectrum_sum_two(g, *s, p);
  const std::uint32_t i = std::get<Fund>(shape).i;
  const GroupTag& grp = g.group();
  switch (grp.family) {
    case Family::A:
      return spectrum_exterior(g, i);
    case Family::C:
      return spectrum_sp_fund(g, i, p);
    case Family::B:
      if (p == 2) refuse(g, "fund:" + std::to_string(i) + " in characteristic 2");
      if (i == 1) return spectrum_natural(g);
      if (i == grp.n) return spectrum_spin_brute(g);
      if (i == 2) return spectrum_b_fund2_lower_bound(g);
      refuse(g, "fund:" + std::to_string(i));
  }
  refuse(g, "fund:" + std::to_string(i));
}

}  // namespace

Spectrum twisted_product_spectrum(const SemisimpleElement& g, std::span<const BaseShape> factors,
                                  std::uint32_t p) {
  if (factors.empty()) throw Error(ErrorCode::UnsupportedShape, "empty twisted product");
  Spectrum acc = base_spectrum(g, factors[0], p);
  if (factors.size() == 1) return acc;
  acc.spin_case.reset();
  for (std::size_t t = 1; t < factors.size(); ++t) {
    const Spectrum next = base_spectrum(g, factors[t], p);
    acc.values = rescale(product_set(acc.values, next.values), g.order());
    acc.exact = acc.exact && next.exact;
  }
  return acc;
}

Spectrum spectrum_of(const SemisimpleElement& g, const Shape& shape, std::uint32_t p) {
  check_characteristic(g, p);
  if (const auto* t = std::get_if<TwistedProduct>(&shape)) {
    return twisted_product_spectrum(g, t->factors, p);
  }
  const BaseShape base = std::holds_alternative<Fund>(shape) ? BaseShape{std::get<Fund>(shape)}
                                                             : BaseShape{std::get<SumTwoFund>(shape)};
  return twisted_product_spectrum(g, std::span<const BaseShape>(&base, 1), p);
}

RootSet spin_case_set(const SpinCase& c, std::uint32_t order) {
  const auto need = [&](std::uint32_t divisor) {
    if (order % divisor != 0) {
      throw Error(ErrorCode::OutOfRange, c.to_string() + " needs " + std::to_string(divisor) +
                                             " | " + std::to_string(order));
    }
  };
  switch (c.kind) {
    case SpinCase::Kind::full:
      return all_roots(order);
    case SpinCase::Kind::case2:
      need(c.m);
      return rescale(product_set(punctured(c.m), all_roots(order / c.m)), order);
    case SpinCase::Kind::case3:
      need(5 * c.m);
      return rescale(product_set(product_set(punctured(c.m), primitive_roots(5)),
                                 all_roots(order / (5 * c.m))),
                     order);
  }
  return RootSet(order);
}

std::optional<SpinCase> match_spin_case(const RootSet& s) {
  const std::uint32_t order = s.modulus();
  if (s.is_full()) return SpinCase{SpinCase::Kind::full, 0};
  for (std::uint32_t m : {3u, 5u, 9u}) {
    if (order % m != 0 || std::gcd(m, order / m) != 1) continue;
    const SpinCase c{SpinCase::Kind::case2, m};
    if (spin_case_set(c, order) == s) return c;
  }
  for (std::uint32_t m : {3u, 9u}) {
    if (order % (5 * m) != 0 || std::gcd(5 * m, order / (5 * m)) != 1) continue;
    const SpinCase c{SpinCase::Kind::case3, m};
    if (spin_case_set(c, order) == s) return c;
  }
  return std::nullopt;
}

std::uint64_t delta_nu(std::span<const std::uint32_t> coeffs) {
  std::uint64_t total = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    total += static_cast<std::uint64_t>(std::popcount(coeffs[j])) * (j + 1);
  }
  return total;
}

bool sp2_eig1_absent(const SemisimpleElement& g, std::span<const std::uint32_t> coeffs) {
  require_family(g, Family::C, "characteristic-2 criterion");
  const std::uint32_t n = g.group().n;
  if (coeffs.size() != n) {
    throw Error(ErrorCode::OutOfRange, "expected " + std::to_string(n) + " coefficients, got " +
                                           std::to_string(coeffs.size()));
  }
  if (coeffs[n - 1] == 0) {
    throw Error(ErrorCode::OutOfRange, "characteristic-2 criterion needs a_n != 0");
  }
  return delta_nu(coeffs.first(n - 1)) < si(g);
}

std::vector<std::vector<std::uint32_t>> factor_coefficients(const Shape& shape,
                                                            std::uint32_t rank) {
  const auto one = [rank](const BaseShape& b) {
    std::vector<std::uint32_t> a(rank, 0);
    const auto put = [&](std::uint32_t i) {
      if (i < 1 || i > rank) {
        throw Error(ErrorCode::OutOfRange, "fundamental weight " + std::to_string(i) +
                                               " outside [1, " + std::to_string(rank) + "]");
      }
      ++a[i - 1];
    };
    if (const auto* f = std::get_if<Fund>(&b)) {
      put(f->i);
    } else {
      const auto& s = std::get<SumTwoFund>(b);
      put(s.i);
      put(s.j);
    }
    return a;
  };
  std::vector<std::vector<std::uint32_t>> out;
  if (const auto* t = std::get_if<TwistedProduct>(&shape)) {
    for (const BaseShape& b : t->factors) out.push_back(one(b));
  } else if (const auto* f = std::get_if<Fund>(&shape)) {
    out.push_back(one(*f));
  } else {
    out.push_back(one(std::get<SumTwoFund>(shape)));
  }
  return out;
}

bool sp2_eig1_absent(const SemisimpleElement& g, const Shape& shape) {
  require_family(g, Family::C, "characteristic-2 criterion");
  const std::uint32_t n = g.group().n;
  std::uint64_t delta = 0;
  std::uint64_t top = 0;
  for (const auto& a : factor_coefficients(shape, n)) {
    delta += delta_nu(std::span<const std::uint32_t>(a).first(n - 1));
    top += a[n - 1];
  }
  if (top == 0) {
    throw Error(ErrorCode::OutOfRange, "characteristic-2 criterion needs a_n != 0");
  }
  return delta < si(g);
}

}  // namespace rateig
