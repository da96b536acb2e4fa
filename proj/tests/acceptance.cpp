// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "properties.hpp"
#include "rateig/classify.hpp"
#include "rateig/lemma_suite.hpp"
#include "rateig/report.hpp"
#include "rateig/tables.hpp"

using namespace rateig;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

VerificationReport run(TheoremId id) { return verify(id, default_bounds(id), jobs()); }

// Zero mismatches, every check clean, and every table row has instances in
// the window, all of which lack eigenvalue 1.
void require_table(Outcome& o, const VerificationReport& r) {
  const std::string name(theorem_name(r.theorem));
  o.require(r.mismatches.empty(), name + ": " + std::to_string(r.mismatches.size()) + " mismatches");
  for (const TableRow& row : r.table) {
    o.require(row.instances > 0, name + ": no instance of " + row.anchor);
    o.require(row.hits == row.instances, name + ": " + row.anchor + " hit " +
                                             std::to_string(row.hits) + " of " +
                                             std::to_string(row.instances));
  }
  for (const CheckTally& c : r.checks) {
    o.require(c.failed == 0, name + ": " + c.name + " failed " + std::to_string(c.failed));
  }
  for (const ExceptionCase& e : r.exceptions) {
    o.require(e.anchor != "not in table", name + ": unlisted exception " + e.element + " " + e.weight);
  }
  o.require(r.passed(), name + " report not passed");
  o.detail << " " << name << ": " << r.cases_checked << " cases, " << r.exceptions.size()
           << " exceptions;";
}

Outcome criterion1() {
  Outcome o;
  const LemmaReport r = run_lemma_suite(45);
  for (const IdentityResult& i : r.identities) {
    o.require(i.passed(), i.id + " failed at " + std::to_string(i.failures.size()) + " points");
  }
  o.require(r.identities.size() == 13, "expected 13 identity families");
  o.detail << " 13 identity families over odd m <= 45;";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const VerificationReport r = run(TheoremId::th1);
  require_table(o, r);
  o.require(r.table.size() == 7, "th1 table should have 7 items");
  return o;
}

Outcome criterion3() {
  Outcome o;
  const VerificationReport ts1 = run(TheoremId::ts1);
  require_table(o, ts1);
  o.require(ts1.table.size() == 6, "ts1 table should have 6 items");
  o.require(ts1.exceptions.size() == 6, "ts1 should have exactly 6 exceptional elements");
  o.require(ts1.checks.size() == 1 && ts1.checks[0].passed == ts1.elements_checked,
            "natural-within-w_3 not checked on every element");
  const VerificationReport om12 = run(TheoremId::om12);
  require_table(o, om12);
  o.require(om12.exceptions.size() == 1 && om12.exceptions[0].element == "a:10:phi(5)+phi(9)" &&
                om12.exceptions[0].weight == "fund:5",
            "om12 exception should be a:10:phi(5)+phi(9) with fund:5 only");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const VerificationReport r = run(TheoremId::tt9);
  o.require(r.mismatches.empty(), std::to_string(r.mismatches.size()) + " out-of-shape violations");
  o.require(r.passed(), "tt9 report not passed");
  o.detail << " " << r.cases_checked << " cases, " << r.exceptions.size()
           << " violations, all of the allowed shape;";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const VerificationReport r = run(TheoremId::th3_spin);
  o.require(r.bounds.rank_hi >= 12, "window below n = 12");
  for (const CheckTally& c : r.checks) {
    o.require(c.failed == 0, c.name);
    o.require(c.passed == r.elements_checked, c.name + " not run on every element");
  }
  o.require(r.checks.size() == 2, "expected two spin checks");
  o.detail << " " << r.elements_checked << " elements, brute = closed and labels agree;";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const VerificationReport spin = run(TheoremId::th3_spin);
  require_table(o, spin);
  const VerificationReport mixed = run(TheoremId::th3_mixed);
  require_table(o, mixed);
  // Explicit product formula on (A)(2)-shaped elements.
  const Bounds b = default_bounds(TheoremId::th3_mixed);
  std::uint64_t shaped = 0;
  for (std::uint32_t n = b.rank_lo; n <= b.rank_hi; ++n) {
    for (const SemisimpleElement& g : enumerate_rational(make_group(Family::B, n), b.max_order)) {
      const SpinCase c = predicted_spin_case(g);
      if (c.kind != SpinCase::Kind::case3) continue;
      ++shaped;
      const std::uint32_t order = g.order();
      const RootSet expected =
          set_difference(all_roots(order), rescale(all_roots(order / (5 * c.m)), order));
      const RootSet got = spectrum_of(g, TwistedProduct{{Fund{1}, Fund{n}}}, 0).values;
      o.require(got == expected, "fund:1&spin on " + format_element(g));
    }
  }
  o.require(shaped > 0, "no (A)(2)-shaped elements");
  o.detail << " product formula on " << shaped << " (A)(2)-shaped elements;";
  for (const std::string& f : spin.findings) {
    if (f.find("m=9") != std::string::npos) o.detail << " finding: " << f << ";";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const VerificationReport r = run(TheoremId::th2_odd);
  require_table(o, r);
  std::uint32_t b_items = 0;
  bool c_item = false;
  for (const TableRow& row : r.table) {
    if (row.anchor.rfind("th2(B)(", 0) == 0) ++b_items;
    if (row.anchor.rfind("th2(C)", 0) == 0) c_item = true;
  }
  o.require(b_items == 6, "expected items (B)(1)-(6)");
  o.require(c_item, "expected item (C)");
  return o;
}

Outcome criterion8() {
  Outcome o;
  const VerificationReport spin = run(TheoremId::th2_char2_spin);
  require_table(o, spin);
  const VerificationReport mixed = run(TheoremId::th2_char2_mixed);
  require_table(o, mixed);
  o.require(spin.checks.size() == 3 && spin.checks[0].passed == spin.elements_checked,
            "Si bound not checked on every element");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const props::Window w{12, 10, 8, 45, 1000};
  for (const props::Tally& t : props::all(w)) {
    o.require(t.ok(), t.name + (t.failures.empty() ? "" : " at " + t.failures.front()));
    o.detail << " " << t.name << ": " << t.checked << ";";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"identity suite, odd m <= 45", criterion1},
      {"th1 table over SL_n, 2 <= n <= 14", criterion2},
      {"ts1 and om12 tables, natural spectrum within E(w_3)", criterion3},
      {"tt9 natural-spectrum containment", criterion4},
      {"spin brute force equals closed form, case labels", criterion5},
      {"th3 spin and product spectra", criterion6},
      {"th2 for p != 2 over Sp_2n, 2 <= n <= 8", criterion7},
      {"th2 for p = 2: Si, singular shapes, tables (D) and (E)", criterion8},
      {"property suite", criterion9},
  };
  bool all_ok = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_ok = all_ok && o.ok;
    std::printf("criterion %zu: %s  %s (%.2fs)%s\n", k + 1, o.ok ? "PASS" : "FAIL",
                criteria[k].first.c_str(), secs, o.detail.str().c_str());
  }
  return all_ok ? 0 : 1;
}
