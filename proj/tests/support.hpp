#pragma once

#include "oracle.hpp"
#include "rateig/cyclo.hpp"

inline oracle::Residues set_of(const rateig::RootSet& s) {
  const std::vector<std::uint32_t> r = s.residues();
  return {r.begin(), r.end()};
}
