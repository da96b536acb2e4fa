#pragma once

// Exhaustive verification of eigenvalue-1 classifications.
//
// For a theorem id, every rational odd-order element in a window of ranks
// and orders is paired with every weight the theorem quantifies over.  The
// eigenvalue-1 status computed from spectra is compared against the
// theorem's exception table (see tables.hpp).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rateig/elements.hpp"

namespace rateig {

enum class TheoremId {
  th1,
  tt9,
  ts1,
  om12,
  th2_odd,
  th2_char2_spin,
  th2_char2_mixed,
  th3_spin,
  th3_mixed,
};

/// "th1", "tt9", "ts1", "om12", "th2-odd", "th2-char2-spin",
/// "th2-char2-mixed", "th3-spin", "th3-mixed".
std::string_view theorem_name(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name) noexcept;
const std::vector<TheoremId>& all_theorems();

Family theorem_family(TheoremId id) noexcept;

/// ranks are the group parameter n of GroupTag (SL_n, Sp_2n, Spin_2n+1).
struct Bounds {
  std::uint32_t rank_lo = 0;
  std::uint32_t rank_hi = 0;
  std::uint32_t max_order = 45;
  std::uint32_t p = 0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

Bounds default_bounds(TheoremId id) noexcept;

/// Throws OutOfRange for windows outside the theorem's hypotheses or the
/// enumeration limits, InvalidModulus for an even or too small max_order.
void validate_bounds(TheoremId id, const Bounds& b);

/// Every orbit multiset with orders 3 <= m <= max_order (m odd) that fits the
/// natural module of `group`, with the trivial count forced by dimension.
/// Ordered by ascending block list, no duplicates.
std::vector<SemisimpleElement> enumerate_rational(const GroupTag& group,
                                                  std::uint32_t max_order);

struct Mismatch {
  std::string element;
  std::string weight;
  std::string kind;
  std::string predicted;
  std::string computed;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct ExceptionCase {
  std::string element;
  std::string weight;
  std::string anchor;

  friend bool operator==(const ExceptionCase&, const ExceptionCase&) = default;
};

struct TableRow {
  std::string anchor;
  /// Checked cases the entry describes, decided from its statement alone.
  std::uint64_t instances = 0;
  /// Of those, cases where eigenvalue 1 was computed to be absent.
  std::uint64_t hits = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct CheckTally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;

  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::th1;
  Bounds bounds;
  std::uint64_t elements_checked = 0;
  std::uint64_t cases_checked = 0;
  std::uint64_t cases_skipped = 0;
  std::vector<Mismatch> mismatches;
  std::vector<ExceptionCase> exceptions;
  std::vector<TableRow> table;
  std::vector<CheckTally> checks;
  std::vector<std::string> findings;
  std::optional<double> wall_time;

  /// No mismatches, hits == instances on every table row, every check
  /// clean, and at least one case checked.
  bool passed() const noexcept;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Elements are split across `jobs` threads; the report does not depend on
/// the split.
VerificationReport verify(TheoremId id, const Bounds& bounds, unsigned jobs = 1);

}  // namespace rateig
