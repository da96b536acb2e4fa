#pragma once

// Identity checks on Phi(m), Lambda_i, Lambda*_3 and Delta over every odd m
// up to a bound.  Each family recomputes its sets exhaustively and compares
// against the stated identity.

#include <cstdint>
#include <string>
#include <vector>

namespace rateig {

/// Largest bound accepted by run_lemma_suite (Delta is enumerated over
/// 2^(phi(m)/2) choices).
inline constexpr std::uint32_t kMaxLemmaBound = 57;

struct IdentityResult {
  std::string id;
  std::string statement;
  std::uint64_t checked = 0;
  std::vector<std::string> failures{};

  bool passed() const noexcept { return failures.empty(); }
};

struct LemmaReport {
  std::uint32_t max_m = 0;
  std::vector<IdentityResult> identities;

  bool passed() const noexcept;
};

/// Identity ids: t11 t2p b33 33a 333 rr1a rr1b 222 112 ni5 bt4 n66 c55.
/// Requires max_m odd, 3 <= max_m <= kMaxLemmaBound.
LemmaReport run_lemma_suite(std::uint32_t max_m);

}  // namespace rateig
