#pragma once

// Text forms of elements and weights (see docs/grammar.md).
//
//   element  := family ":" dim ":" term ("+" term)*
//   family   := "a" | "b" | "c"
//   term     := "phi(" m ")" ["*" count] | "1" ["*" count]
//   weight   := factor ("&" factor)* | "omega:" a1 "," ... "," an
//   factor   := "fund:" i | "sum:" i "," j | "spin"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rateig/elements.hpp"
#include "rateig/spectra.hpp"

namespace rateig {

/// Highest weight given by its coefficients on the fundamental weights.
struct CoefficientWeight {
  std::vector<std::uint32_t> a;
  friend bool operator==(const CoefficientWeight&, const CoefficientWeight&) = default;
};

using WeightInput = std::variant<Shape, CoefficientWeight>;

/// Throws ParseError on malformed text; validation errors from build_element
/// propagate unchanged.
SemisimpleElement parse_element(std::string_view text);

/// Canonical form: blocks by ascending m, then the trivial part.
std::string format_element(const SemisimpleElement& g);

/// `spin` needs family b and means fund:n.  Indices are checked against the
/// rank of `group`.
WeightInput parse_weight(std::string_view text, const GroupTag& group);

std::string format_shape(const Shape& shape, const GroupTag& group);
std::string format_weight(const WeightInput& w, const GroupTag& group);

/// "a..b" or a single number.
std::pair<std::uint32_t, std::uint32_t> parse_range(std::string_view text);

}  // namespace rateig
