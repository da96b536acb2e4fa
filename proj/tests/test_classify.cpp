#include <doctest.h>

#include <functional>

#include "oracle.hpp"
#include "rateig/error.hpp"
#include "rateig/report.hpp"
#include "rateig/syntax.hpp"
#include "rateig/tables.hpp"

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

// Number of multisets of odd orders 3..max_order, weighted by phi, with total
// weight at most `budget`: the sum of the first budget+1 coefficients of
// prod_m 1 / (1 - x^phi(m)).
std::uint64_t multiset_count(std::uint32_t budget, std::uint32_t max_order) {
  std::vector<std::uint64_t> coeff(budget + 1, 0);
  coeff[0] = 1;
  for (std::uint32_t m = 3; m <= max_order; m += 2) {
    const std::uint32_t w = oracle::phi(m);
    for (std::uint32_t k = w; k <= budget; ++k) coeff[k] += coeff[k - w];
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : coeff) total += c;
  return total;
}

bool has(const std::vector<SemisimpleElement>& v, const std::string& text) {
  const SemisimpleElement g = parse_element(text);
  return std::find(v.begin(), v.end(), g) != v.end();
}

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(all_theorems().size() == 9);
  for (TheoremId id : all_theorems()) CHECK(parse_theorem(theorem_name(id)) == id);
  CHECK_FALSE(parse_theorem("th4").has_value());
  CHECK(theorem_family(TheoremId::th3_mixed) == Family::B);
  CHECK(theorem_family(TheoremId::th2_char2_spin) == Family::C);
  CHECK(default_bounds(TheoremId::th1) == Bounds{2, 14, 45, 0});
  CHECK(default_bounds(TheoremId::ts1) == Bounds{5, 14, 45, 0});
  CHECK(default_bounds(TheoremId::om12) == Bounds{10, 14, 45, 0});
  CHECK(default_bounds(TheoremId::th2_odd) == Bounds{2, 8, 45, 0});
  CHECK(default_bounds(TheoremId::th2_char2_mixed) == Bounds{2, 8, 45, 2});
  CHECK(default_bounds(TheoremId::th3_spin) == Bounds{3, 12, 45, 0});
}

TEST_CASE("bounds validation") {
  CHECK_NOTHROW(validate_bounds(TheoremId::th1, {2, 14, 45, 0}));
  CHECK_NOTHROW(validate_bounds(TheoremId::th1, {2, 14, 45, 7}));
  CHECK(code_of([] { validate_bounds(TheoremId::th1, {2, 14, 44, 0}); }) ==
        ErrorCode::InvalidModulus);
  CHECK(code_of([] { validate_bounds(TheoremId::th1, {2, 14, 1, 0}); }) ==
        ErrorCode::InvalidModulus);
  CHECK(code_of([] { validate_bounds(TheoremId::th1, {9, 3, 45, 0}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::ts1, {4, 8, 45, 0}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::th3_spin, {2, 8, 45, 0}); }) ==
        ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::th3_spin, {3, 8, 45, 2}); }) ==
        ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::th2_char2_spin, {2, 8, 45, 0}); }) ==
        ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::th1, {2, 8, 45, 9}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { validate_bounds(TheoremId::th1, {2, 400, 45, 0}); }) ==
        ErrorCode::OutOfRange);
}

TEST_CASE("enumeration examples") {
  const auto a2 = enumerate_rational(make_group(Family::A, 2), 45);
  REQUIRE(a2.size() == 2);
  CHECK(a2[0].blocks().empty());
  CHECK(format_element(a2[1]) == "a:2:phi(3)");
  const auto a6 = enumerate_rational(make_group(Family::A, 6), 9);
  CHECK(has(a6, "a:6:phi(9)"));
  CHECK(has(a6, "a:6:phi(3)*3"));
  CHECK(has(a6, "a:6:phi(3)*2+1*2"));
  CHECK(has(a6, "a:6:phi(7)"));
  for (const SemisimpleElement& g : a6) {
    for (const OrbitBlock& b : g.blocks()) CHECK(b.m <= 9);
  }
  const auto b3 = enumerate_rational(make_group(Family::B, 3), 9);
  for (const SemisimpleElement& g : b3) CHECK(g.trivial_count() % 2 == 1);
  CHECK(has(b3, "b:7:phi(7)+1"));
  CHECK(has(b3, "b:7:phi(3)*3+1"));
}

TEST_CASE("enumeration count matches the generating function") {
  for (Family f : {Family::A, Family::B, Family::C}) {
    for (std::uint32_t n = (f == Family::B ? 3 : 2); n <= 12; ++n) {
      for (std::uint32_t max_order : {9u, 21u, 45u}) {
        const GroupTag g = make_group(f, n);
        const auto all = enumerate_rational(g, max_order);
        const std::uint32_t budget =
            f == Family::B ? g.natural_dimension() - 1 : g.natural_dimension();
        CHECK_MESSAGE(all.size() == multiset_count(budget, max_order),
                      family_letter(f) << n << " max " << max_order);
        for (std::size_t k = 1; k < all.size(); ++k) {
          CHECK(format_element(all[k - 1]) != format_element(all[k]));
        }
      }
    }
  }
}

TEST_CASE("predicted exceptions from the stated tables") {
  const auto predicted = [](TheoremId id, const std::string& e, const std::string& w) {
    const SemisimpleElement g = parse_element(e);
    return predicted_exception(id, g, parse_weight(w, g.group())).has_value();
  };
  CHECK(predicted(TheoremId::th1, "a:8:phi(15)", "fund:5"));
  CHECK_FALSE(predicted(TheoremId::th1, "a:8:phi(15)", "fund:4"));
  CHECK(predicted(TheoremId::th1, "a:6:phi(9)", "fund:3"));
  CHECK(predicted(TheoremId::th1, "a:14:phi(15)+phi(9)", "fund:11"));
  CHECK_FALSE(predicted(TheoremId::th1, "a:14:phi(15)+phi(9)", "fund:7"));
  CHECK(predicted(TheoremId::th1, "a:4:phi(5)", "fund:1"));
  CHECK_FALSE(predicted(TheoremId::th1, "a:5:phi(5)+1", "fund:1"));
  CHECK(predicted(TheoremId::th2_odd, "c:14:phi(15)+phi(9)", "fund:3"));
  CHECK(predicted(TheoremId::om12, "a:10:phi(5)+phi(9)", "fund:5"));
  CHECK(predicted(TheoremId::th2_char2_spin, "c:10:phi(5)+phi(7)", "fund:5"));
  CHECK_FALSE(predicted(TheoremId::th2_char2_spin, "c:8:phi(3)+phi(9)", "fund:4"));
  CHECK(predicted(TheoremId::th2_char2_mixed, "c:16:phi(5)+phi(9)+phi(7)", "omega:1,0,0,0,0,0,0,1"));
  CHECK(predicted(TheoremId::th3_mixed, "b:11:phi(5)+phi(9)+1", "fund:1&spin"));
  CHECK_FALSE(predicted(TheoremId::th3_mixed, "b:11:phi(5)+phi(9)+1", "fund:2"));
  CHECK(code_of([&] { predicted(TheoremId::th1, "c:8:phi(15)", "fund:3"); }) ==
        ErrorCode::InvalidGroup);
}

TEST_CASE("structural helpers") {
  const SemisimpleElement g = parse_element("b:19:phi(5)+phi(9)+phi(7)+1*3");
  CHECK(isolated_orbits(g, {3, 5, 9}) == std::vector<std::uint32_t>{5, 9});
  CHECK(predicted_spin_case(g) == SpinCase{SpinCase::Kind::case3, 9});
  CHECK(predicted_spin_case(parse_element("b:9:phi(5)+1*5")) == SpinCase{SpinCase::Kind::case2, 5});
  CHECK(predicted_spin_case(parse_element("b:9:phi(5)*2+1")) == SpinCase{SpinCase::Kind::full, 0});
  CHECK(predicted_spin_case(parse_element("b:13:phi(3)+phi(15)+1*3")) ==
        SpinCase{SpinCase::Kind::full, 0});
  CHECK(natural_containment_exception_shape(parse_element("a:4:phi(3)+1*2"), 2));
  CHECK_FALSE(natural_containment_exception_shape(parse_element("a:4:phi(3)+1*2"), 1));
  CHECK_FALSE(natural_containment_exception_shape(parse_element("a:4:phi(3)*2"), 2));
}

TEST_CASE("tables cite anchors") {
  CHECK(exception_table(TheoremId::th1).size() == 7);
  CHECK(exception_table(TheoremId::ts1).size() == 6);
  CHECK(exception_table(TheoremId::om12).size() == 1);
  CHECK(exception_table(TheoremId::tt9).empty());
  for (const TableEntry& e : exception_table(TheoremId::th1)) CHECK(e.anchor.rfind("th1(", 0) == 0);
}

TEST_CASE("reports do not depend on the number of jobs") {
  for (TheoremId id : all_theorems()) {
    Bounds b = default_bounds(id);
    b.rank_hi = std::min(b.rank_hi, b.rank_lo + 3);
    b.max_order = 21;
    VerificationReport one = verify(id, b, 1);
    VerificationReport many = verify(id, b, 5);
    one.wall_time.reset();
    many.wall_time.reset();
    CHECK_MESSAGE(one == many, theorem_name(id));
    CHECK(to_json(one) == to_json(many));
    CHECK(one.passed());
  }
}

TEST_CASE("characteristic p skips elements of order divisible by p") {
  const VerificationReport r = verify(TheoremId::th1, {2, 8, 21, 3}, 2);
  CHECK(r.cases_skipped > 0);
  CHECK(r.passed());
  const VerificationReport r0 = verify(TheoremId::th1, {2, 8, 21, 0}, 2);
  CHECK(r0.cases_skipped == 0);
  CHECK(r.elements_checked == r0.elements_checked);
}

TEST_CASE("table rows with instances are exactly the rows reachable in the window") {
  for (TheoremId id : all_theorems()) {
    const Bounds full = default_bounds(id);
    for (std::uint32_t hi = full.rank_lo; hi <= full.rank_hi; hi += 3) {
      const Bounds b{full.rank_lo, hi, full.max_order, full.p};
      const VerificationReport r = verify(id, b, 4);
      CHECK(r.passed());
      const auto& table = exception_table(id);
      for (std::size_t k = 0; k < table.size(); ++k) {
        CHECK_MESSAGE(entry_in_window(table[k], b) == (r.table[k].instances > 0),
                      table[k].anchor << " ranks " << b.rank_lo << ".." << hi);
      }
    }
  }
}
