#include "rateig/lemma_suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "rateig/cyclo.hpp"
#include "rateig/error.hpp"
#include "rateig/lambda.hpp"

namespace rateig {

bool LemmaReport::passed() const noexcept {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityResult& r) { return r.passed(); });
}

namespace {

RootSet punctured(std::uint32_t m) {
  return set_difference(all_roots(m), RootSet::from_residues(m, {0}));
}

std::string at(std::uint32_t m) { return "m=" + std::to_string(m); }

void expect(IdentityResult& r, bool ok, const std::string& where) {
  ++r.checked;
  if (!ok) r.failures.push_back(where);
}

// Per-modulus sets shared by several identity families.
struct Cache {
  std::map<std::uint32_t, std::vector<RootSet>> lambdas;
  std::map<std::uint32_t, RootSet> deltas;

  const std::vector<RootSet>& lambda(std::uint32_t m) {
    auto it = lambdas.find(m);
    if (it == lambdas.end()) it = lambdas.emplace(m, lambda_brute_all(m)).first;
    return it->second;
  }
  const RootSet& delta(std::uint32_t m) {
    auto it = deltas.find(m);
    if (it == deltas.end()) it = deltas.emplace(m, delta_brute(m)).first;
    return it->second;
  }
};

// Some eta1, eta2, eta3 in Phi(m) with eta1 eta2 eta3 = 1 and the six values
// eta_k^(+-1) pairwise distinct.
bool has_six_distinct_triple(std::uint32_t m) {
  const std::vector<std::uint32_t> phi = primitive_roots(m).residues();
  const RootSet prim = primitive_roots(m);
  for (std::uint32_t a : phi) {
    for (std::uint32_t b : phi) {
      const std::uint32_t c = (2 * m - a - b) % m;
      if (!prim.contains(c)) continue;
      std::vector<std::uint32_t> six{a, m - a, b, m - b, c, m - c};
      std::sort(six.begin(), six.end());
      if (std::adjacent_find(six.begin(), six.end()) == six.end()) return true;
    }
  }
  return false;
}

}  // namespace

LemmaReport run_lemma_suite(std::uint32_t max_m) {
  if (max_m % 2 == 0 || max_m < 3) {
    throw Error(ErrorCode::InvalidModulus, "bound must be odd and at least 3, got " +
                                               std::to_string(max_m));
  }
  if (max_m > kMaxLemmaBound) {
    throw Error(ErrorCode::EnumerationLimit, "bound " + std::to_string(max_m) +
                                                 " exceeds the limit " +
                                                 std::to_string(kMaxLemmaBound));
  }
  std::vector<std::uint32_t> odd;
  for (std::uint32_t m = 3; m <= max_m; m += 2) odd.push_back(m);
  Cache cache;
  LemmaReport report;
  report.max_m = max_m;

  {
    IdentityResult r{"t11", "Phi(m) Phi(m) = R(m)"};
    for (std::uint32_t m : odd) {
      expect(r, product_set(primitive_roots(m), primitive_roots(m)) == all_roots(m), at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"t2p", "(R(m1)\\1)(R(m2)\\1) = R(lcm(m1,m2)) when gcd(m1,m2) > 1"};
    for (std::uint32_t a : odd) {
      for (std::uint32_t b : odd) {
        if (b < a || std::gcd(a, b) == 1) continue;
        expect(r, product_set(punctured(a), punctured(b)) == all_roots(common_modulus(a, b)),
               "m1=" + std::to_string(a) + " m2=" + std::to_string(b));
      }
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"b33",
                     "every zeta in R(m) has eta in Phi(m) with zeta eta in Phi(m), eta != zeta "
                     "when m > 3"};
    for (std::uint32_t m : odd) {
      const RootSet prim = primitive_roots(m);
      for (std::uint32_t z = 0; z < m; ++z) {
        bool found = false;
        for (std::uint32_t e : prim.residues()) {
          if (m > 3 && e == z) continue;
          if (prim.contains((z + e) % m)) {
            found = true;
            break;
          }
        }
        expect(r, found, at(m) + " zeta=" + std::to_string(z));
      }
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"33a", "Lambda_2(m) = R(m) for m > 3"};
    for (std::uint32_t m : odd) {
      if (m > 3) expect(r, cache.lambda(m)[2] == all_roots(m), at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"333",
                     "eta1 eta2 eta3 = 1 with six distinct eta_k^(+-1) exists iff m not in "
                     "{3,5,9,15}"};
    for (std::uint32_t m : odd) {
      const bool expected = m != 3 && m != 5 && m != 9 && m != 15;
      expect(r, has_six_distinct_triple(m) == expected, at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"rr1a", "Lambda_3(m) = R(m), or R(m)\\1 for m in {5,9,15}; m > 3"};
    for (std::uint32_t m : odd) {
      if (m <= 3) continue;
      const bool exceptional = m == 5 || m == 9 || m == 15;
      expect(r, cache.lambda(m)[3] == (exceptional ? punctured(m) : all_roots(m)), at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"rr1b", "Lambda*_3(m) = R(m) for m > 3"};
    for (std::uint32_t m : odd) {
      if (m > 3) expect(r, lambda3_star(m) == all_roots(m), at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"222", "Lambda_3(m) within Lambda_i(m) for 3 < i <= phi(m)-3, phi(m) > 6"};
    for (std::uint32_t m : odd) {
      const std::uint32_t phi = euler_phi(m);
      if (phi <= 6) continue;
      const auto& lam = cache.lambda(m);
      for (std::uint32_t i = 4; i + 3 <= phi; ++i) {
        expect(r, is_subset(lam[3], lam[i]), at(m) + " i=" + std::to_string(i));
      }
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"112", "exhaustive Lambda_i(m) equals the closed form for all i, m > 3"};
    for (std::uint32_t m : odd) {
      if (m <= 3) continue;
      const auto& lam = cache.lambda(m);
      for (std::uint32_t i = 1; i <= euler_phi(m); ++i) {
        expect(r, lam[i] == lambda_closed(m, i), at(m) + " i=" + std::to_string(i));
      }
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"ni5", "1 in Delta(m) for m not in {3,5,9}"};
    for (std::uint32_t m : odd) {
      if (m != 3 && m != 5 && m != 9) expect(r, cache.delta(m).has_one(), at(m));
    }
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"bt4", "Phi(m) within Delta(m)"};
    for (std::uint32_t m : odd) expect(r, is_subset(primitive_roots(m), cache.delta(m)), at(m));
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"n66", "R(m)\\1 within Delta(m)"};
    for (std::uint32_t m : odd) expect(r, is_subset(punctured(m), cache.delta(m)), at(m));
    report.identities.push_back(std::move(r));
  }
  {
    IdentityResult r{"c55", "exhaustive Delta(m) equals R(m), or R(m)\\1 for m in {3,5,9}"};
    for (std::uint32_t m : odd) expect(r, cache.delta(m) == delta_closed(m), at(m));
    report.identities.push_back(std::move(r));
  }
  return report;
}

}  // namespace rateig
