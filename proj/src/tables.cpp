#include "rateig/tables.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "rateig/error.hpp"

namespace rateig {

namespace {

constexpr std::uint32_t kAnyN = std::numeric_limits<std::uint32_t>::max();

using Blocks = std::vector<OrbitBlock>;

std::optional<std::uint32_t> fund_index(const WeightInput& w) {
  const auto* shape = std::get_if<Shape>(&w);
  if (shape == nullptr) return std::nullopt;
  if (const auto* f = std::get_if<Fund>(shape)) return f->i;
  if (const auto* t = std::get_if<TwistedProduct>(shape); t && t->factors.size() == 1) {
    if (const auto* f = std::get_if<Fund>(&t->factors[0])) return f->i;
  }
  return std::nullopt;
}

// Nonzero (index, coefficient) pairs of the weight, one list entry per
// factor entry; twisted factors are not added together.
std::vector<std::pair<std::uint32_t, std::uint32_t>> profile(const WeightInput& w,
                                                             std::uint32_t rank) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const auto add = [&](const std::vector<std::uint32_t>& a) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] != 0) out.emplace_back(static_cast<std::uint32_t>(j + 1), a[j]);
    }
  };
  if (const auto* c = std::get_if<CoefficientWeight>(&w)) {
    add(c->a);
  } else {
    for (const auto& a : factor_coefficients(std::get<Shape>(w), rank)) add(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool power_of_two(std::uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

bool same_blocks(const SemisimpleElement& g, const Blocks& blocks) {
  return g.trivial_count() == 0 && g.blocks() == blocks;
}

std::uint32_t count_of(const SemisimpleElement& g, std::uint32_t m) {
  for (const OrbitBlock& b : g.blocks()) {
    if (b.m == m) return b.count;
  }
  return 0;
}

// Each orbit other than those listed has order coprime to `modulus`.
bool rest_coprime(const SemisimpleElement& g, std::initializer_list<std::uint32_t> listed,
                  std::uint32_t modulus) {
  for (const OrbitBlock& b : g.blocks()) {
    if (std::find(listed.begin(), listed.end(), b.m) != listed.end()) continue;
    if (std::gcd(b.m, modulus) != 1) return false;
  }
  return true;
}

TableEntry concrete(std::string anchor, std::uint32_t n, Blocks blocks,
                    std::vector<std::uint32_t> weights) {
  std::uint32_t top = 3;
  for (const OrbitBlock& b : blocks) top = std::max(top, b.m);
  TableEntry e{std::move(anchor), n, n, false, top, {}};
  e.matches = [n, blocks = std::move(blocks), weights = std::move(weights)](
                  const SemisimpleElement& g, const WeightInput& w) {
    const auto i = fund_index(w);
    return g.group().n == n && i && std::find(weights.begin(), weights.end(), *i) != weights.end() &&
           same_blocks(g, blocks);
  };
  return e;
}

std::vector<TableEntry> th1_table() {
  std::vector<TableEntry> t;
  TableEntry natural{"th1(1): n even, no eigenvalue 1 on the natural module, w in {w_1, w_{n-1}}",
                     2, kAnyN, true, 3, {}};
  natural.matches = [](const SemisimpleElement& g, const WeightInput& w) {
    const auto i = fund_index(w);
    const std::uint32_t n = g.group().n;
    return n % 2 == 0 && g.trivial_count() == 0 && i && (*i == 1 || *i == n - 1);
  };
  t.push_back(std::move(natural));
  t.push_back(concrete("th1(2): n=6, |g|=9, w_3", 6, {{9, 1}}, {3}));
  t.push_back(concrete("th1(3): n=6, |g|=15, blocks 5+3, w_3", 6, {{3, 1}, {5, 1}}, {3}));
  t.push_back(concrete("th1(4): n=8, |g|=15, blocks 15, w in {w_3, w_5}", 8, {{15, 1}}, {3, 5}));
  t.push_back(concrete("th1(5): n=8, |g|=15, blocks 5+3+3, w in {w_3, w_5}", 8,
                       {{3, 2}, {5, 1}}, {3, 5}));
  t.push_back(concrete("th1(6): n=10, |g|=45, blocks 5+9, w in {w_3, w_5, w_7}", 10,
                       {{5, 1}, {9, 1}}, {3, 5, 7}));
  t.push_back(concrete("th1(7): n=14, |g|=45, blocks 15+9, w in {w_3, w_11}", 14,
                       {{9, 1}, {15, 1}}, {3, 11}));
  return t;
}

std::vector<TableEntry> ts1_table() {
  return {
      concrete("ts1(1): n=6, D=Phi(9), |g|=9", 6, {{9, 1}}, {3}),
      concrete("ts1(2): n=6, D=Phi(5)+Phi(3), |g|=15", 6, {{3, 1}, {5, 1}}, {3}),
      concrete("ts1(3): n=8, D=Phi(15), |g|=15", 8, {{15, 1}}, {3}),
      concrete("ts1(4): n=8, D=Phi(5)+Phi(3)+Phi(3), |g|=15", 8, {{3, 2}, {5, 1}}, {3}),
      concrete("ts1(5): n=10, D=Phi(5)+Phi(9), |g|=45", 10, {{5, 1}, {9, 1}}, {3}),
      concrete("ts1(6): n=14, D=Phi(15)+Phi(9), |g|=45", 14, {{9, 1}, {15, 1}}, {3}),
  };
}

std::vector<TableEntry> om12_table() {
  return {concrete("om12: n=10, D=Phi(5)+Phi(9), |g|=45, w_5", 10, {{5, 1}, {9, 1}}, {5})};
}

std::vector<TableEntry> th2_odd_table() {
  std::vector<TableEntry> t;
  TableEntry natural{"th2(A): w_1, no eigenvalue 1 on the natural module", 2, kAnyN, false, 3, {}};
  natural.matches = [](const SemisimpleElement& g, const WeightInput& w) {
    const auto i = fund_index(w);
    return i && *i == 1 && g.trivial_count() == 0;
  };
  t.push_back(std::move(natural));
  t.push_back(concrete("th2(B)(1): n=3, |g|=9, w_3", 3, {{9, 1}}, {3}));
  t.push_back(concrete("th2(B)(2): n=3, |g|=15, blocks 5+3, w_3", 3, {{3, 1}, {5, 1}}, {3}));
  t.push_back(concrete("th2(B)(3): n=4, |g|=15, blocks 15, w_3", 4, {{15, 1}}, {3}));
  t.push_back(
      concrete("th2(B)(4): n=4, |g|=15, blocks 5+3+3, w_3", 4, {{3, 2}, {5, 1}}, {3}));
  t.push_back(concrete("th2(B)(5): n=5, |g|=45, blocks 5+9, w_3", 5, {{5, 1}, {9, 1}}, {3}));
  t.push_back(concrete("th2(B)(6): n=7, |g|=45, blocks 15+9, w_3", 7, {{9, 1}, {15, 1}}, {3}));
  t.push_back(concrete("th2(C): n=5, blocks 5+9, w_5", 5, {{5, 1}, {9, 1}}, {5}));
  return t;
}

// w = 2^t w_n.
bool is_twisted_last(const SemisimpleElement& g, const WeightInput& w) {
  const auto prof = profile(w, g.group().rank());
  return prof.size() == 1 && prof[0].first == g.group().n && power_of_two(prof[0].second);
}

// w = 2^s w_1 + 2^t w_n.
bool is_twisted_first_last(const SemisimpleElement& g, const WeightInput& w,
                           bool require_unit) {
  const auto prof = profile(w, g.group().rank());
  const auto ok = [&](std::uint32_t c) { return require_unit ? c == 1 : power_of_two(c); };
  return prof.size() == 2 && prof[0].first == 1 && prof[1].first == g.group().n &&
         ok(prof[0].second) && ok(prof[1].second);
}

std::vector<TableEntry> th2_char2_spin_table() {
  std::vector<TableEntry> t;
  const auto single = [](std::uint32_t k, std::uint32_t m, std::uint32_t min_n) {
    TableEntry e{"th2(D)(1): w=2^t w_n, g=diag(g_1,y), k=" + std::to_string(k) +
                     ", |g_1|=" + std::to_string(m) + ", (|y|,|g_1|)=1",
                 min_n, kAnyN, false, m, {}};
    e.matches = [m](const SemisimpleElement& g, const WeightInput& w) {
      return is_twisted_last(g, w) && isolated_orbits(g, {3, 5, 9}) == std::vector{m};
    };
    return e;
  };
  const auto pair = [](std::uint32_t k1, std::uint32_t k2, std::uint32_t m1, std::uint32_t m2,
                       std::uint32_t min_n) {
    TableEntry e{"th2(D)(2): w=2^t w_n, g=diag(g_1,g_2,y), (k_1,k_2)=(" + std::to_string(k1) +
                     "," + std::to_string(k2) + "), |g_i|=" + std::to_string(m1) + "," +
                     std::to_string(m2) + ", (|y|,15)=1",
                 min_n, kAnyN, false, std::max(m1, m2), {}};
    e.matches = [m1, m2](const SemisimpleElement& g, const WeightInput& w) {
      return is_twisted_last(g, w) && isolated_orbits(g, {3, 5, 9}) == std::vector{m1, m2};
    };
    return e;
  };
  t.push_back(single(1, 3, 2));
  t.push_back(single(2, 5, 2));
  t.push_back(single(3, 9, 3));
  t.push_back(pair(1, 2, 3, 5, 3));
  t.push_back(pair(2, 3, 5, 9, 5));
  return t;
}

std::vector<TableEntry> th2_char2_mixed_table() {
  const auto entry = [](std::string anchor, std::uint32_t partner, std::uint32_t min_n) {
    TableEntry e{std::move(anchor), min_n, kAnyN, false, std::max(5u, partner), {}};
    e.matches = [partner](const SemisimpleElement& g, const WeightInput& w) {
      return is_twisted_first_last(g, w, false) && count_of(g, 5) == 1 &&
             count_of(g, partner) == 1 && rest_coprime(g, {5, partner}, 15);
    };
    return e;
  };
  return {
      entry("th2(E)(1): w=2^s w_1+2^t w_n, |g_1|=5 on dim 4, |g_2|=3 on dim 2, (|g_3|,15)=1", 3, 3),
      entry("th2(E)(2): w=2^s w_1+2^t w_n, |g_1|=5 on dim 4, |g_2|=9 on dim 6, (|g_3|,15)=1", 9, 5),
  };
}

bool is_spin_weight(const SemisimpleElement& g, const WeightInput& w) {
  const auto prof = profile(w, g.group().rank());
  return prof.size() == 1 && prof[0].first == g.group().n && prof[0].second == 1;
}

std::vector<TableEntry> th3_spin_table() {
  std::vector<TableEntry> t;
  for (std::uint32_t m : {3u, 5u, 9u}) {
    TableEntry e{"th3(A)(1): w=w_n, m=" + std::to_string(m) + ", (m,|g|/m)=1", 3, kAnyN, false, m,
                 {}};
    e.matches = [m](const SemisimpleElement& g, const WeightInput& w) {
      return is_spin_weight(g, w) &&
             predicted_spin_case(g) == SpinCase{SpinCase::Kind::case2, m};
    };
    t.push_back(std::move(e));
  }
  for (std::uint32_t m : {3u, 9u}) {
    TableEntry e{"th3(A)(2): w=w_n, m=" + std::to_string(m) + ", (5m,|g|/5m)=1",
                 m == 3 ? 3u : 5u, kAnyN, false, m, {}};
    e.matches = [m](const SemisimpleElement& g, const WeightInput& w) {
      return is_spin_weight(g, w) &&
             predicted_spin_case(g) == SpinCase{SpinCase::Kind::case3, m};
    };
    t.push_back(std::move(e));
  }
  return t;
}

std::vector<TableEntry> th3_mixed_table() {
  std::vector<TableEntry> t;
  for (std::uint32_t m : {3u, 9u}) {
    TableEntry e{"th3(B): w=p^a w_1+p^b w_n, g as in (A)(2) with m=" + std::to_string(m),
                 m == 3 ? 3u : 5u, kAnyN, false, m, {}};
    e.matches = [m](const SemisimpleElement& g, const WeightInput& w) {
      return is_twisted_first_last(g, w, true) &&
             predicted_spin_case(g) == SpinCase{SpinCase::Kind::case3, m};
    };
    t.push_back(std::move(e));
  }
  return t;
}

}  // namespace

const std::vector<TableEntry>& exception_table(TheoremId id) {
  static const std::vector<TableEntry> th1 = th1_table();
  static const std::vector<TableEntry> ts1 = ts1_table();
  static const std::vector<TableEntry> om12 = om12_table();
  static const std::vector<TableEntry> th2_odd = th2_odd_table();
  static const std::vector<TableEntry> char2_spin = th2_char2_spin_table();
  static const std::vector<TableEntry> char2_mixed = th2_char2_mixed_table();
  static const std::vector<TableEntry> th3_spin = th3_spin_table();
  static const std::vector<TableEntry> th3_mixed = th3_mixed_table();
  static const std::vector<TableEntry> none;
  switch (id) {
    case TheoremId::th1: return th1;
    case TheoremId::tt9: return none;
    case TheoremId::ts1: return ts1;
    case TheoremId::om12: return om12;
    case TheoremId::th2_odd: return th2_odd;
    case TheoremId::th2_char2_spin: return char2_spin;
    case TheoremId::th2_char2_mixed: return char2_mixed;
    case TheoremId::th3_spin: return th3_spin;
    case TheoremId::th3_mixed: return th3_mixed;
  }
  return none;
}

std::optional<std::size_t> predicted_exception(TheoremId id, const SemisimpleElement& g,
                                               const WeightInput& w) {
  if (g.group().family != theorem_family(id)) {
    throw Error(ErrorCode::InvalidGroup, std::string(theorem_name(id)) + " needs family " +
                                             family_letter(theorem_family(id)));
  }
  const auto& table = exception_table(id);
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].matches(g, w)) return k;
  }
  return std::nullopt;
}

bool entry_in_window(const TableEntry& e, const Bounds& b) {
  if (b.max_order < e.needs_order) return false;
  const std::uint32_t lo = std::max(e.min_n, b.rank_lo);
  const std::uint32_t hi = std::min(e.max_n, b.rank_hi);
  if (lo > hi) return false;
  if (e.even_n_only) return lo % 2 == 0 || lo < hi;
  return true;
}

std::vector<std::uint32_t> isolated_orbits(const SemisimpleElement& g,
                                           std::initializer_list<std::uint32_t> candidates) {
  std::vector<std::uint32_t> out;
  for (const OrbitBlock& b : g.blocks()) {
    if (b.count != 1) continue;
    if (std::find(candidates.begin(), candidates.end(), b.m) == candidates.end()) continue;
    const bool coprime = std::all_of(g.blocks().begin(), g.blocks().end(), [&](const OrbitBlock& o) {
      return o.m == b.m || std::gcd(o.m, b.m) == 1;
    });
    if (coprime) out.push_back(b.m);
  }
  return out;
}

SpinCase predicted_spin_case(const SemisimpleElement& g) {
  const std::vector<std::uint32_t> iso = isolated_orbits(g, {3, 5, 9});
  if (iso.size() == 1) return {SpinCase::Kind::case2, iso[0]};
  if (iso.size() == 2) {
    const std::uint32_t other = iso[0] == 5 ? iso[1] : iso[0];
    return {SpinCase::Kind::case3, other};
  }
  return {SpinCase::Kind::full, 0};
}

bool natural_containment_exception_shape(const SemisimpleElement& g, std::uint32_t i) {
  const std::uint32_t n = g.group().n;
  const std::uint32_t order = g.order();
  if (n % 2 != 0 || i % 2 != 0) return false;
  if (order % 3 != 0 || (order / 3) % 3 == 0) return false;
  std::uint64_t divisible = 0;
  for (const OrbitBlock& b : g.blocks()) {
    if (b.m % 3 == 0) divisible += static_cast<std::uint64_t>(b.count) * euler_phi(b.m);
  }
  return divisible == 2;
}

}  // namespace rateig
