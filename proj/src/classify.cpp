#include "rateig/classify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>
#include <tuple>

#include "rateig/enumerate.hpp"
#include "rateig/error.hpp"
#include "rateig/spectra.hpp"
#include "rateig/syntax.hpp"
#include "rateig/tables.hpp"

namespace rateig {

namespace {

struct TheoremInfo {
  TheoremId id;
  std::string_view name;
  Family family;
  Bounds defaults;
  std::uint32_t least_n;
  std::uint32_t most_n;
};

constexpr std::array<TheoremInfo, 9> kTheorems{{
    {TheoremId::th1, "th1", Family::A, {2, 14, 45, 0}, 2, 24},
    {TheoremId::tt9, "tt9", Family::A, {2, 14, 45, 0}, 2, 24},
    {TheoremId::ts1, "ts1", Family::A, {5, 14, 45, 0}, 5, 24},
    {TheoremId::om12, "om12", Family::A, {10, 14, 45, 0}, 10, 24},
    {TheoremId::th2_odd, "th2-odd", Family::C, {2, 8, 45, 0}, 2, 12},
    {TheoremId::th2_char2_spin, "th2-char2-spin", Family::C, {2, 8, 45, 2}, 2, 16},
    {TheoremId::th2_char2_mixed, "th2-char2-mixed", Family::C, {2, 8, 45, 2}, 2, 10},
    {TheoremId::th3_spin, "th3-spin", Family::B, {3, 12, 45, 0}, 3, 16},
    {TheoremId::th3_mixed, "th3-mixed", Family::B, {3, 12, 45, 0}, 3, 16},
}};

const TheoremInfo& info(TheoremId id) {
  for (const TheoremInfo& t : kTheorems) {
    if (t.id == id) return t;
  }
  return kTheorems[0];
}

}  // namespace

std::string_view theorem_name(TheoremId id) noexcept { return info(id).name; }

std::optional<TheoremId> parse_theorem(std::string_view name) noexcept {
  for (const TheoremInfo& t : kTheorems) {
    if (t.name == name) return t.id;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = [] {
    std::vector<TheoremId> v;
    for (const TheoremInfo& t : kTheorems) v.push_back(t.id);
    return v;
  }();
  return ids;
}

Family theorem_family(TheoremId id) noexcept { return info(id).family; }

Bounds default_bounds(TheoremId id) noexcept { return info(id).defaults; }

void validate_bounds(TheoremId id, const Bounds& b) {
  const TheoremInfo& t = info(id);
  const std::string name(t.name);
  if (b.max_order % 2 == 0 || b.max_order < 3) {
    throw Error(ErrorCode::InvalidModulus, "max order must be odd and at least 3");
  }
  if (b.max_order > 999) throw Error(ErrorCode::OutOfRange, "max order above 999");
  if (b.rank_lo > b.rank_hi) throw Error(ErrorCode::OutOfRange, "empty rank range");
  if (b.rank_lo < t.least_n || b.rank_hi > t.most_n) {
    throw Error(ErrorCode::OutOfRange, name + " accepts ranks " + std::to_string(t.least_n) +
                                           ".." + std::to_string(t.most_n));
  }
  const bool char2 = id == TheoremId::th2_char2_spin || id == TheoremId::th2_char2_mixed;
  if (char2 && b.p != 2) throw Error(ErrorCode::OutOfRange, name + " is stated for p = 2");
  const bool odd_only = id == TheoremId::th2_odd || id == TheoremId::th3_spin ||
                        id == TheoremId::th3_mixed;
  if (odd_only && b.p == 2) throw Error(ErrorCode::OutOfRange, name + " is stated for p != 2");
  if (b.p == 1) throw Error(ErrorCode::OutOfRange, "characteristic must be 0 or a prime");
  for (std::uint32_t d = 2; d * d <= b.p; ++d) {
    if (b.p % d == 0) throw Error(ErrorCode::OutOfRange, "characteristic must be 0 or a prime");
  }
}

bool VerificationReport::passed() const noexcept {
  if (!mismatches.empty()) return false;
  if (cases_checked == 0) return false;
  for (const TableRow& r : table) {
    if (r.hits != r.instances) return false;
  }
  for (const CheckTally& c : checks) {
    if (c.failed != 0) return false;
  }
  return true;
}

namespace {

void enumerate_from(const std::vector<std::uint32_t>& orders, std::size_t idx,
                    std::uint32_t budget, std::vector<OrbitBlock>& current,
                    std::vector<std::vector<OrbitBlock>>& out) {
  if (idx == orders.size()) {
    out.push_back(current);
    return;
  }
  const std::uint32_t m = orders[idx];
  const std::uint32_t phi = euler_phi(m);
  enumerate_from(orders, idx + 1, budget, current, out);
  for (std::uint32_t c = 1; c * phi <= budget; ++c) {
    current.push_back({m, c});
    enumerate_from(orders, idx + 1, budget - c * phi, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<SemisimpleElement> enumerate_rational(const GroupTag& group, std::uint32_t max_order) {
  std::vector<std::uint32_t> orders;
  for (std::uint32_t m = 3; m <= max_order; m += 2) orders.push_back(m);
  const std::uint32_t dim = group.natural_dimension();
  // Orbits have even size; B keeps at least one eigenvalue 1.
  const std::uint32_t budget = group.family == Family::B ? dim - 1 : dim;
  std::vector<std::vector<OrbitBlock>> shapes;
  std::vector<OrbitBlock> current;
  enumerate_from(orders, 0, budget, current, shapes);
  std::sort(shapes.begin(), shapes.end());
  std::vector<SemisimpleElement> out;
  out.reserve(shapes.size());
  for (auto& blocks : shapes) {
    std::uint32_t used = 0;
    for (const OrbitBlock& b : blocks) used += b.count * euler_phi(b.m);
    std::uint64_t order = 1;
    for (const OrbitBlock& b : blocks) order = lcm_u64(order, b.m);
    if (order > kMaxModulus) continue;
    out.push_back(build_element(group, std::move(blocks), dim - used));
  }
  return out;
}

namespace {


// Results for one element.
struct Outcome {
  std::uint64_t cases = 0;
  std::uint64_t skipped = 0;
  std::vector<Mismatch> mismatches;
  std::vector<ExceptionCase> exceptions;
  // Per table entry: {instances, hits}.
  std::vector<std::array<std::uint64_t, 2>> rows;
  std::vector<std::array<std::uint64_t, 2>> checks;
  std::map<std::string, std::uint64_t> counters;

  void check(std::size_t k, bool ok) { ++checks[k][ok ? 0 : 1]; }
};

struct Context {
  TheoremId id;
  Bounds bounds;
  std::vector<std::string> check_names;
};

constexpr const char* kTt9Anchor =
    "tt9: n even, w_i with i even, |g|=3l, (3,l)=1, two eigenvalues of order 3k";

std::string absence(bool absent) { return absent ? "absent" : "present"; }

// Compares the computed eigenvalue-1 status with the table.  `computed` is
// empty when an inexact spectrum missed 1 and nothing can be concluded.
void judge(const Context& ctx, Outcome& out, const SemisimpleElement& g,
           const std::string& element, const WeightInput& w, std::optional<bool> computed) {
  ++out.cases;
  const std::string weight = format_weight(w, g.group());
  const std::optional<std::size_t> entry = predicted_exception(ctx.id, g, w);
  const bool predicted = entry.has_value();
  if (!computed) {
    out.mismatches.push_back({element, weight, "eigenvalue-1", absence(predicted), "unknown"});
    return;
  }
  if (entry) ++out.rows[*entry][0];
  if (*computed) {
    if (entry) ++out.rows[*entry][1];
    const std::string anchor =
        entry ? exception_table(ctx.id)[*entry].anchor : std::string("not in table");
    out.exceptions.push_back({element, weight, anchor});
  }
  if (*computed != predicted) {
    out.mismatches.push_back({element, weight, "eigenvalue-1", absence(predicted),
                              absence(*computed)});
  }
}

std::optional<bool> absent_from(const Spectrum& s) {
  if (has_eigenvalue_one(s)) return false;
  if (!s.exact) return std::nullopt;
  return true;
}

void run_family_a(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                  Outcome& out) {
  const std::uint32_t n = g.group().n;
  std::uint32_t lo = 1;
  std::uint32_t hi = n - 1;
  if (ctx.id == TheoremId::ts1) lo = hi = 3;
  if (ctx.id == TheoremId::om12) {
    lo = 5;
    hi = n - 5;
  }
  const RootSet natural = spectrum_natural(g).values;
  for (std::uint32_t i = lo; i <= hi; ++i) {
    const Spectrum s = spectrum_exterior(g, i);
    const WeightInput w = Shape{Fund{i}};
    if (ctx.id == TheoremId::tt9) {
      ++out.cases;
      if (is_subset(natural, s.values)) continue;
      const std::string weight = format_weight(w, g.group());
      if (natural_containment_exception_shape(g, i)) {
        out.exceptions.push_back({element, weight, kTt9Anchor});
      } else {
        out.mismatches.push_back(
            {element, weight, "natural-containment", "contained", "not contained"});
      }
      continue;
    }
    judge(ctx, out, g, element, w, absent_from(s));
    if (ctx.id == TheoremId::ts1) out.check(0, is_subset(natural, s.values));
  }
}

void run_th2_odd(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                 Outcome& out) {
  const std::uint32_t n = g.group().n;
  std::vector<Shape> shapes;
  for (std::uint32_t i = 1; i <= n; ++i) shapes.push_back(Fund{i});
  shapes.push_back(SumTwoFund{1, 1});
  shapes.push_back(SumTwoFund{1, n});
  for (const Shape& shape : shapes) {
    judge(ctx, out, g, element, shape, absent_from(spectrum_of(g, shape, ctx.bounds.p)));
  }
}

void check_singular(const SemisimpleElement& g, Outcome& out) {
  const std::vector<F2Block> sing = singular_indices(g);
  out.check(0, sing.size() <= 2);
  bool shapes_ok = true;
  for (const F2Block& b : sing) {
    const bool listed = (b.d == 1 && b.m == 3) || (b.d == 2 && b.m == 5) || (b.d == 3 && b.m == 9);
    shapes_ok = shapes_ok && listed;
  }
  out.check(1, shapes_ok);
  if (sing.size() == 2) out.check(2, sing[0].m == 5 || sing[1].m == 5);
}

void run_char2_spin(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                    Outcome& out) {
  check_singular(g, out);
  const Shape shape = Fund{g.group().n};
  judge(ctx, out, g, element, shape, sp2_eig1_absent(g, shape));
}

// All (a_1, ..., a_{n-1}, 1) with a_j in {0, 1, 2}, except w_n itself.
std::vector<std::vector<std::uint32_t>> mixed_weights(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> a(n, 0);
  a[n - 1] = 1;
  while (true) {
    std::size_t j = 0;
    while (j + 1 < n && a[j] == 2) a[j++] = 0;
    if (j + 1 == n) break;
    ++a[j];
    out.push_back(a);
  }
  return out;
}

void run_char2_mixed(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                     Outcome& out) {
  check_singular(g, out);
  const std::uint32_t n = g.group().n;
  const std::uint32_t s = si(g);
  for (const auto& a : mixed_weights(n)) {
    const bool absent = delta_nu(std::span<const std::uint32_t>(a).first(n - 1)) < s;
    judge(ctx, out, g, element, CoefficientWeight{a}, absent);
  }
}

void run_th3_spin(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                  Outcome& out) {
  const Spectrum brute = spectrum_spin_brute(g);
  const Spectrum closed = spectrum_spin_closed(g);
  const SpinCase predicted = predicted_spin_case(g);
  const std::string weight = "spin";
  out.check(0, brute.values == closed.values);
  if (brute.values != closed.values) {
    out.mismatches.push_back({element, weight, "spin-closed-form", closed.values.to_string(),
                              brute.values.to_string()});
  }
  const bool label_ok = brute.spin_case == predicted;
  out.check(1, label_ok);
  if (!label_ok) {
    out.mismatches.push_back({element, weight, "spin-case", predicted.to_string(),
                              brute.spin_case ? brute.spin_case->to_string() : "none"});
  }
  if (brute.spin_case && brute.spin_case->kind == SpinCase::Kind::case2) {
    const std::uint32_t m = brute.spin_case->m;
    const std::uint32_t order = g.order();
    const RootSet written =
        rescale(product_set(primitive_roots(m), all_roots(order / m)), order);
    ++out.counters["case2." + std::to_string(m)];
    if (written == brute.values) ++out.counters["case2-written." + std::to_string(m)];
    const RootSet computed_form = rescale(
        product_set(set_difference(all_roots(m), RootSet::from_residues(m, {0})),
                    all_roots(order / m)),
        order);
    if (computed_form == brute.values) ++out.counters["case2-punctured." + std::to_string(m)];
  }
  ++out.counters["label." + (brute.spin_case ? brute.spin_case->to_string() : "none")];
  judge(ctx, out, g, element, Shape{Fund{g.group().n}}, absent_from(brute));
}

void run_th3_mixed(const Context& ctx, const SemisimpleElement& g, const std::string& element,
                   Outcome& out) {
  const std::uint32_t n = g.group().n;
  const std::vector<Shape> shapes{
      SumTwoFund{1, n},
      TwistedProduct{{Fund{1}, Fund{n}}},
      SumTwoFund{2, n},
      TwistedProduct{{Fund{n}, Fund{n}}},
      TwistedProduct{{Fund{1}, Fund{1}, Fund{n}}},
      Fund{1},
      Fund{2},
  };
  for (const Shape& shape : shapes) {
    judge(ctx, out, g, element, shape, absent_from(spectrum_of(g, shape, ctx.bounds.p)));
  }
}

std::vector<std::string> check_names(TheoremId id) {
  switch (id) {
    case TheoremId::ts1:
      return {"natural spectrum within E(w_3)"};
    case TheoremId::th2_char2_spin:
    case TheoremId::th2_char2_mixed:
      return {"Si(g) <= 2", "singular blocks have (d,m) in {(1,3),(2,5),(3,9)}",
              "two singular blocks include order 5"};
    case TheoremId::th3_spin:
      return {"exhaustive spin spectrum equals product of closed-form Delta",
              "spin case from the set equals the case from block structure"};
    default:
      return {};
  }
}

void run_element(const Context& ctx, const SemisimpleElement& g, Outcome& out) {
  out.checks.assign(ctx.check_names.size(), {0, 0});
  out.rows.assign(exception_table(ctx.id).size(), {0, 0});
  const std::string element = format_element(g);
  if (ctx.bounds.p != 0 && g.order() % ctx.bounds.p == 0) {
    ++out.skipped;
    return;
  }
  switch (ctx.id) {
    case TheoremId::th1:
    case TheoremId::tt9:
    case TheoremId::ts1:
    case TheoremId::om12:
      run_family_a(ctx, g, element, out);
      break;
    case TheoremId::th2_odd:
      run_th2_odd(ctx, g, element, out);
      break;
    case TheoremId::th2_char2_spin:
      run_char2_spin(ctx, g, element, out);
      break;
    case TheoremId::th2_char2_mixed:
      run_char2_mixed(ctx, g, element, out);
      break;
    case TheoremId::th3_spin:
      run_th3_spin(ctx, g, element, out);
      break;
    case TheoremId::th3_mixed:
      run_th3_mixed(ctx, g, element, out);
      break;
  }
}

std::vector<std::string> findings(TheoremId id, const std::map<std::string, std::uint64_t>& c) {
  const auto get = [&](const std::string& k) {
    const auto it = c.find(k);
    return it == c.end() ? std::uint64_t{0} : it->second;
  };
  std::vector<std::string> out;
  if (id == TheoremId::th3_spin) {
    std::string labels = "spin cases:";
    for (const auto& [key, count] : c) {
      if (key.rfind("label.", 0) == 0) labels += " " + key.substr(6) + "=" + std::to_string(count);
    }
    out.push_back(labels);
    for (std::uint32_t m : {3u, 5u, 9u}) {
      const std::uint64_t total = get("case2." + std::to_string(m));
      const std::uint64_t written = get("case2-written." + std::to_string(m));
      const std::uint64_t punctured = get("case2-punctured." + std::to_string(m));
      if (total == 0) continue;
      out.push_back("th3(A)(1) with m=" + std::to_string(m) + ": the form Phi(m)R(|g|/m) equals " +
                    "the computed spectrum on " + std::to_string(written) + " of " +
                    std::to_string(total) + " elements; (R(m)\\1)R(|g|/m) equals it on " +
                    std::to_string(punctured) + " of " + std::to_string(total));
    }
  }
  return out;
}

}  // namespace

VerificationReport verify(TheoremId id, const Bounds& bounds, unsigned jobs) {
  validate_bounds(id, bounds);
  const auto start = std::chrono::steady_clock::now();
  const Context ctx{id, bounds, check_names(id)};
  const Family family = theorem_family(id);

  std::vector<SemisimpleElement> elements;
  for (std::uint32_t n = bounds.rank_lo; n <= bounds.rank_hi; ++n) {
    auto batch = enumerate_rational(make_group(family, n), bounds.max_order);
    std::move(batch.begin(), batch.end(), std::back_inserter(elements));
  }

  std::vector<Outcome> outcomes(elements.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    try {
      for (std::size_t k = next++; k < elements.size(); k = next++) {
        run_element(ctx, elements[k], outcomes[k]);
      }
    } catch (...) {
      const std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = elements.size();
    }
  };
  const unsigned threads = std::max(1u, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  VerificationReport report;
  report.theorem = id;
  report.bounds = bounds;
  report.elements_checked = elements.size();
  const auto& table = exception_table(id);
  for (const TableEntry& e : table) report.table.push_back({e.anchor, 0, 0});
  for (const std::string& name : ctx.check_names) report.checks.push_back({name, 0, 0});
  std::map<std::string, std::uint64_t> counters;
  for (Outcome& o : outcomes) {
    report.cases_checked += o.cases;
    report.cases_skipped += o.skipped;
    std::move(o.mismatches.begin(), o.mismatches.end(), std::back_inserter(report.mismatches));
    std::move(o.exceptions.begin(), o.exceptions.end(), std::back_inserter(report.exceptions));
    for (std::size_t k = 0; k < o.rows.size(); ++k) {
      report.table[k].instances += o.rows[k][0];
      report.table[k].hits += o.rows[k][1];
    }
    for (std::size_t k = 0; k < o.checks.size(); ++k) {
      report.checks[k].passed += o.checks[k][0];
      report.checks[k].failed += o.checks[k][1];
    }
    for (const auto& [key, count] : o.counters) counters[key] += count;
  }
  if (id == TheoremId::tt9) {
    // The shape is allowed, not required, so its instances are its hits.
    report.table.push_back({kTt9Anchor, report.exceptions.size(), report.exceptions.size()});
  }
  const auto by_text = [](const auto& a, const auto& b) {
    return std::tie(a.element, a.weight) < std::tie(b.element, b.weight);
  };
  std::stable_sort(report.mismatches.begin(), report.mismatches.end(), by_text);
  std::stable_sort(report.exceptions.begin(), report.exceptions.end(), by_text);
  report.findings = findings(id, counters);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rateig
