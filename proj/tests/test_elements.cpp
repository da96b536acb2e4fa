#include <doctest.h>

#include <functional>

#include <algorithm>
#include <map>

#include "rateig/elements.hpp"
#include "rateig/error.hpp"
#include "rateig/syntax.hpp"
#include "support.hpp"

using namespace rateig;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected throw");
  return ErrorCode::ParseError;
}

std::vector<std::uint32_t> sorted(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Cosets of <2> on the units mod m.  A coset closed under negation is one
// irreducible block of half its size; other cosets pair with their negatives.
std::vector<F2Block> coset_blocks(std::uint32_t m) {
  std::vector<F2Block> out;
  std::set<std::uint32_t> seen;
  for (std::uint32_t u : oracle::units(m)) {
    if (seen.count(u)) continue;
    std::set<std::uint32_t> coset;
    for (std::uint32_t x = u; !coset.count(x); x = 2 * x % m) coset.insert(x);
    const bool self_dual = coset.count(m - u) != 0;
    seen.insert(coset.begin(), coset.end());
    const auto size = static_cast<std::uint32_t>(coset.size());
    if (self_dual) {
      out.push_back({size / 2, m, F2Kind::irreducible});
    } else {
      for (std::uint32_t x : coset) seen.insert(m - x);
      out.push_back({size, m, F2Kind::split_pair});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("groups") {
  CHECK(make_group(Family::A, 6).rank() == 5);
  CHECK(make_group(Family::A, 6).natural_dimension() == 6);
  CHECK(make_group(Family::B, 5).natural_dimension() == 11);
  CHECK(make_group(Family::C, 5).natural_dimension() == 10);
  CHECK(code_of([] { make_group(Family::B, 2); }) == ErrorCode::InvalidGroup);
  CHECK(code_of([] { make_group(Family::A, 1); }) == ErrorCode::InvalidGroup);
}

TEST_CASE("validation order") {
  const GroupTag a8 = make_group(Family::A, 8);
  const GroupTag c4 = make_group(Family::C, 4);
  const GroupTag b4 = make_group(Family::B, 4);
  CHECK(code_of([&] { build_element(a8, {{4, 1}}, 6); }) == ErrorCode::EvenOrder);
  CHECK(code_of([&] { build_element(c4, {{4, 1}}, 5); }) == ErrorCode::EvenOrder);
  CHECK(code_of([&] { build_element(c4, {{5, 1}}, 3); }) == ErrorCode::ParityViolation);
  CHECK(code_of([&] { build_element(b4, {{5, 1}}, 4); }) == ErrorCode::ParityViolation);
  CHECK(code_of([&] { build_element(c4, {{5, 1}}, 2); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([&] { build_element(a8, {{5, 1}}, 3); }) == ErrorCode::DimensionMismatch);
  CHECK_NOTHROW(build_element(b4, {{5, 1}}, 5));
}

TEST_CASE("blocks are merged and sorted") {
  const SemisimpleElement g =
      build_element(make_group(Family::A, 8), {{5, 1}, {3, 1}, {3, 1}}, 0);
  REQUIRE(g.blocks().size() == 2);
  CHECK(g.blocks()[0] == OrbitBlock{3, 2});
  CHECK(g.blocks()[1] == OrbitBlock{5, 1});
  CHECK(g.order() == 15);
  CHECK(element_order(g) == 15);
}

TEST_CASE("diagonal and top half agree with the oracle") {
  const std::vector<std::pair<std::vector<std::pair<std::uint32_t, std::uint32_t>>, std::uint32_t>>
      cases{{{{3, 2}, {5, 1}}, 2}, {{{9, 1}, {15, 1}}, 0}, {{{7, 1}}, 4}, {{{5, 1}, {9, 1}}, 1}};
  for (const auto& [blocks, k] : cases) {
    std::vector<OrbitBlock> ob;
    std::uint32_t dim = k;
    for (const auto& [m, c] : blocks) {
      ob.push_back({m, c});
      dim += c * oracle::phi(m);
    }
    const oracle::Diagonal d = oracle::diagonal(blocks, k);
    const GroupTag a = make_group(Family::A, dim);
    const SemisimpleElement ga = build_element(a, ob, k);
    CHECK(ga.order() == d.order);
    CHECK(sorted(ga.diagonal()) == sorted(d.exps));
    if (k % 2 == 0) {
      const SemisimpleElement gc = build_element(make_group(Family::C, dim / 2), ob, k);
      CHECK(sorted(gc.top_half()) == sorted(oracle::top_half(d, k / 2)));
      CHECK(gc.top_half().size() == dim / 2);
    } else if (dim >= 7) {
      const SemisimpleElement gb = build_element(make_group(Family::B, dim / 2), ob, k);
      CHECK(sorted(gb.top_half()) == sorted(oracle::top_half(d, (k - 1) / 2)));
    }
  }
}

TEST_CASE("rational and real diagonals") {
  const SemisimpleElement g = parse_element("a:10:phi(5)+phi(9)");
  const std::vector<RootExp> diag = diagonal_roots(g);
  CHECK(is_rational(diag));
  CHECK(is_real(diag));
  const std::vector<RootExp> partial{RootExp(7, 1), RootExp(7, 2), RootExp(7, 4)};
  CHECK_FALSE(is_rational(partial));
  CHECK_FALSE(is_real(partial));
  const std::vector<RootExp> pair{RootExp(7, 1), RootExp(7, 6)};
  CHECK(is_real(pair));
  CHECK_FALSE(is_rational(pair));
}

TEST_CASE("GF(2) blocks by cyclotomic cosets") {
  for (std::uint32_t m = 3; m <= 45; m += 2) {
    if (oracle::phi(m) < 4) continue;
    const GroupTag c = make_group(Family::C, oracle::phi(m) / 2);
    const SemisimpleElement g = build_element(c, {{m, 1}}, 0);
    std::vector<F2Block> got = f2_block_decomposition(g);
    std::vector<F2Block> want = coset_blocks(m);
    const auto key = [](const F2Block& b) { return std::tuple(b.m, b.d, b.kind); };
    std::sort(got.begin(), got.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    std::sort(want.begin(), want.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    CHECK_MESSAGE(got == want, "m=" << m);
  }
}

TEST_CASE("singular index") {
  CHECK(si(parse_element("c:10:phi(5)+phi(7)")) == 1);
  CHECK(si(parse_element("c:10:phi(5)+phi(9)")) == 2);
  CHECK(si(parse_element("c:8:phi(3)+phi(9)")) == 0);
  CHECK(si(parse_element("c:4:phi(3)*2")) == 0);
  CHECK(si(parse_element("c:4:phi(3)+1*2")) == 1);
  CHECK(si(parse_element("c:16:phi(17)")) == 0);
  const auto sing = singular_indices(parse_element("c:10:phi(5)+phi(9)"));
  REQUIRE(sing.size() == 2);
  CHECK(sing[0] == F2Block{2, 5, F2Kind::irreducible});
  CHECK(sing[1] == F2Block{3, 9, F2Kind::irreducible});
}
