#pragma once

// Exception tables: for each theorem, the (element, weight) pairs it lists as
// lacking eigenvalue 1, each tagged with an anchor naming the item.
//
// Entries are encoded from the statements alone, by block structure and
// weight, without looking at any spectrum.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rateig/classify.hpp"
#include "rateig/elements.hpp"
#include "rateig/spectra.hpp"
#include "rateig/syntax.hpp"

namespace rateig {

struct TableEntry {
  std::string anchor;
  /// Ranks n admitting an instance.
  std::uint32_t min_n = 0;
  std::uint32_t max_n = 0;
  bool even_n_only = false;
  /// Largest orbit order an instance needs.
  std::uint32_t needs_order = 3;
  std::function<bool(const SemisimpleElement&, const WeightInput&)> matches;
};

/// Table of a theorem, in the order the items are stated.  Empty for tt9,
/// whose exception shape is checked directly.
const std::vector<TableEntry>& exception_table(TheoremId id);

/// Index of the first entry matching (g, w), if any.
std::optional<std::size_t> predicted_exception(TheoremId id, const SemisimpleElement& g,
                                               const WeightInput& w);

/// Whether the window has an instance of the entry.
bool entry_in_window(const TableEntry& e, const Bounds& b);

/// Orders m in `candidates` of orbits occurring exactly once whose order is
/// coprime to every other orbit of g.  Ascending.
std::vector<std::uint32_t> isolated_orbits(const SemisimpleElement& g,
                                           std::initializer_list<std::uint32_t> candidates);

/// Spin case predicted from the block structure alone: one isolated orbit
/// of order 3, 5 or 9 gives Case2 of it; isolated orbits of orders 5 and 3
/// (or 5 and 9) give Case3(3) (or Case3(9)); otherwise Full.
SpinCase predicted_spin_case(const SemisimpleElement& g);

/// The family-A exceptional shape for natural-spectrum containment: n even,
/// w = w_i with i even, |g| = 3l with gcd(3, l) = 1, and exactly two
/// eigenvalues on the natural module of order divisible by 3.
bool natural_containment_exception_shape(const SemisimpleElement& g, std::uint32_t i);

}  // namespace rateig
