#include <doctest.h>

#include <functional>

#include <json.hpp>

#include "rateig/error.hpp"
#include "rateig/report.hpp"
#include "rateig/syntax.hpp"

using namespace rateig;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected throw");
  return ErrorCode::Unsupported;
}

}  // namespace

TEST_CASE("element text round trips to canonical form") {
  CHECK(format_element(parse_element("a:8:phi(5)+phi(3)*2")) == "a:8:phi(3)*2+phi(5)");
  CHECK(format_element(parse_element("b:11:phi(5)+phi(9)+1")) == "b:11:phi(5)+phi(9)+1");
  CHECK(format_element(parse_element("c:10:phi(5)+phi(9)")) == "c:10:phi(5)+phi(9)");
  CHECK(format_element(parse_element(" a : 9 : 1*3 + phi(3)*3 ")) == "a:9:phi(3)*3+1*3");
  CHECK(format_element(parse_element("a:8:phi(3)+phi(3)+phi(5)")) == "a:8:phi(3)*2+phi(5)");
  const SemisimpleElement g = parse_element("c:8:phi(5)+phi(3)+1*2");
  CHECK(g.group() == make_group(Family::C, 4));
  CHECK(g.trivial_count() == 2);
  CHECK(parse_element(format_element(g)) == g);
}

TEST_CASE("element text errors") {
  CHECK(code_of([] { parse_element("d:8:phi(3)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("a:8"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("a:8:psi(3)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("a:8:phi(3)*"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("b:10:phi(3)+1*8"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("c:9:phi(3)+1*7"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_element("a:8:phi(4)+1*6"); }) == ErrorCode::EvenOrder);
  CHECK(code_of([] { parse_element("a:8:phi(5)"); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { parse_element("c:8:phi(5)+1*3+phi(3)"); }) == ErrorCode::ParityViolation);
}

TEST_CASE("weights") {
  const GroupTag b5 = make_group(Family::B, 5);
  const GroupTag a8 = make_group(Family::A, 8);
  CHECK(format_weight(parse_weight("fund:3", a8), a8) == "fund:3");
  CHECK(format_weight(parse_weight("sum:7,1", a8), a8) == "sum:1,7");
  CHECK(format_weight(parse_weight("spin", b5), b5) == "spin");
  CHECK(format_weight(parse_weight("fund:5", b5), b5) == "spin");
  CHECK(format_weight(parse_weight("fund:1&spin", b5), b5) == "fund:1&spin");
  CHECK(std::get<Shape>(parse_weight("spin", b5)) == Shape{Fund{5}});
  const WeightInput c = parse_weight("omega:1,0,2,0,1", b5);
  CHECK(std::get<CoefficientWeight>(c).a == std::vector<std::uint32_t>{1, 0, 2, 0, 1});
  CHECK(format_weight(c, b5) == "omega:1,0,2,0,1");
  CHECK(code_of([&] { parse_weight("spin", a8); }) == ErrorCode::ParseError);
  CHECK_THROWS_AS(parse_weight("fund:8", a8), Error);
  CHECK_THROWS_AS(parse_weight("fund:0", a8), Error);
  CHECK_THROWS_AS(parse_weight("omega:1,2", b5), Error);
  CHECK_THROWS_AS(parse_weight("wedge:2", a8), Error);
}

TEST_CASE("ranges") {
  CHECK(parse_range("2..14") == std::pair<std::uint32_t, std::uint32_t>{2, 14});
  CHECK(parse_range("7") == std::pair<std::uint32_t, std::uint32_t>{7, 7});
  CHECK_THROWS_AS(parse_range("9..3"), Error);
  CHECK_THROWS_AS(parse_range("a..3"), Error);
  CHECK_THROWS_AS(parse_range(""), Error);
}

TEST_CASE("verification reports round trip byte for byte") {
  for (TheoremId id : {TheoremId::th1, TheoremId::th3_spin, TheoremId::th2_char2_spin}) {
    Bounds b = default_bounds(id);
    b.rank_hi = b.rank_lo + 4;
    const VerificationReport r = verify(id, b, 2);
    const std::string text = to_json(r);
    const VerificationReport back = verification_report_from_json(text);
    CHECK(back == r);
    CHECK(to_json(back) == text);
    VerificationReport untimed = r;
    untimed.wall_time.reset();
    const std::string t2 = to_json(untimed);
    CHECK(t2.find("\"wall_time\": null") != std::string::npos);
    CHECK(to_json(verification_report_from_json(t2)) == t2);
  }
}

TEST_CASE("report field order and header") {
  VerificationReport r;
  r.theorem = TheoremId::om12;
  r.bounds = default_bounds(TheoremId::om12);
  r.mismatches.push_back({"a:10:phi(5)+phi(9)", "fund:5", "eigenvalue-1", "absent", "present"});
  const nlohmann::ordered_json j = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"report_version", "theorem", "bounds", "elements_checked",
                                         "cases_checked", "cases_skipped", "passed", "mismatches",
                                         "exceptions", "table", "checks", "findings",
                                         "wall_time"});
  CHECK(j["report_version"] == 1);
  CHECK(j["bounds"]["max_order"] == 45);
  CHECK(j["bounds"]["p"] == 0);
  CHECK(j["passed"] == false);
  CHECK_FALSE(VerificationReport{}.passed());
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}

TEST_CASE("malformed reports") {
  CHECK(code_of([] { verification_report_from_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { verification_report_from_json("{}"); }) == ErrorCode::ParseError);
  VerificationReport r;
  r.cases_checked = 1;
  const std::string text = to_json(r);
  const std::string bumped = std::string(text).replace(text.find("\"report_version\": 1"),
                                                       19, "\"report_version\": 2");
  CHECK(code_of([&] { verification_report_from_json(bumped); }) == ErrorCode::ParseError);
  const std::string lying =
      std::string(text).replace(text.find("\"passed\": true"), 14, "\"passed\": false");
  CHECK(code_of([&] { verification_report_from_json(lying); }) == ErrorCode::ParseError);
  const std::string unknown = std::string(text).replace(text.find("\"th1\""), 5, "\"th9\"");
  CHECK(code_of([&] { verification_report_from_json(unknown); }) == ErrorCode::ParseError);
}

TEST_CASE("identity reports round trip") {
  const LemmaReport r = run_lemma_suite(15);
  CHECK(r.passed());
  CHECK(r.identities.size() == 13);
  const std::string text = to_json(r);
  CHECK(to_json(lemma_report_from_json(text)) == text);
  CHECK(to_text(r).find("PASS") != std::string::npos);
  CHECK(code_of([] { run_lemma_suite(4); }) == ErrorCode::InvalidModulus);
  CHECK(code_of([] { run_lemma_suite(1); }) == ErrorCode::InvalidModulus);
  CHECK(code_of([] { run_lemma_suite(kMaxLemmaBound + 2); }) == ErrorCode::EnumerationLimit);
}

TEST_CASE("element and spectrum records") {
  const SemisimpleElement g = parse_element("b:11:phi(5)+phi(9)+1");
  const auto e = nlohmann::ordered_json::parse(element_json(g));
  CHECK(e["family"] == "b");
  CHECK(e["n"] == 5);
  CHECK(e["blocks"] == nlohmann::ordered_json::parse("[[5,1],[9,1]]"));
  CHECK(e["trivial_count"] == 1);
  CHECK(e["order"] == 45);
  const SpectrumPrintout s{format_element(g), "spin", 0, spectrum_spin_brute(g)};
  const auto j = nlohmann::ordered_json::parse(to_json(s));
  CHECK(j["mod"] == 45);
  CHECK(j["has_one"] == false);
  CHECK(j["spin_case"] == "Case3(9)");
  CHECK(to_text(s).find("case Case3(9)") != std::string::npos);
}
