#pragma once

// Structured (JSON) and text forms of reports.
//
// JSON output is canonical: fixed field order, lists in the order the report
// holds them (already sorted by verify), two-space indentation.  Parsing a
// document and serializing it again reproduces it byte for byte.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rateig/classify.hpp"
#include "rateig/elements.hpp"
#include "rateig/lemma_suite.hpp"
#include "rateig/spectra.hpp"

namespace rateig {

inline constexpr int kReportVersion = 1;

std::string to_json(const VerificationReport& r);
/// Throws ParseError on malformed input, unknown theorem ids or a version
/// other than kReportVersion.
VerificationReport verification_report_from_json(std::string_view text);
std::string to_text(const VerificationReport& r);

std::string to_json(const LemmaReport& r);
LemmaReport lemma_report_from_json(std::string_view text);
std::string to_text(const LemmaReport& r);

/// Record with family, n, blocks [[m, count], ...], trivial_count, order.
std::string element_json(const SemisimpleElement& g);

struct SpectrumPrintout {
  std::string element;
  std::string weight;
  std::uint32_t p = 0;
  Spectrum spectrum;
};

std::string to_json(const SpectrumPrintout& s);
std::string to_text(const SpectrumPrintout& s);

struct Si2Printout {
  std::string element;
  std::string weight;
  std::uint32_t si = 0;
  std::uint64_t delta = 0;
  bool has_one = false;
};

std::string to_json(const Si2Printout& s);
std::string to_text(const Si2Printout& s);

}  // namespace rateig
