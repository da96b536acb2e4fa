#include "rateig/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <type_traits>
#include <utility>

#include "rateig/error.hpp"

namespace rateig {

namespace {

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::ParseError, "cannot parse '" + std::string(text) + "': " + why);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::uint32_t number(std::string_view part, std::string_view whole) {
  std::uint32_t value = 0;
  const char* end = part.data() + part.size();
  const auto [ptr, ec] = std::from_chars(part.data(), end, value);
  if (part.empty() || ec != std::errc() || ptr != end) {
    fail(whole, "expected a non-negative integer, got '" + std::string(part) + "'");
  }
  return value;
}

bool consume(std::string_view& s, std::string_view prefix) {
  if (s.substr(0, prefix.size()) != prefix) return false;
  s.remove_prefix(prefix.size());
  return true;
}

GroupTag group_from_dimension(char family, std::uint32_t dim, std::string_view whole) {
  switch (family) {
    case 'a':
      return make_group(Family::A, dim);
    case 'b':
      if (dim % 2 == 0) fail(whole, "family b needs an odd dimension 2n+1");
      return make_group(Family::B, (dim - 1) / 2);
    case 'c':
      if (dim % 2 != 0) fail(whole, "family c needs an even dimension 2n");
      return make_group(Family::C, dim / 2);
    default:
      fail(whole, "family must be a, b or c");
  }
}

}  // namespace

SemisimpleElement parse_element(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  const std::vector<std::string_view> head = split(text, ':');
  if (head.size() != 3 || head[0].size() != 1) fail(raw, "expected <family>:<dim>:<terms>");
  const GroupTag group = group_from_dimension(head[0][0], number(head[1], raw), raw);

  std::vector<OrbitBlock> blocks;
  std::uint64_t trivial = 0;
  for (std::string_view term : split(head[2], '+')) {
    if (term.empty()) fail(raw, "empty term");
    std::uint32_t count = 1;
    if (const std::size_t star = term.find('*'); star != std::string_view::npos) {
      count = number(term.substr(star + 1), raw);
      if (count == 0) fail(raw, "multiplicity must be positive");
      term = term.substr(0, star);
    }
    if (term == "1") {
      trivial += count;
      continue;
    }
    if (!consume(term, "phi(") || term.empty() || term.back() != ')') {
      fail(raw, "term must be phi(m) or 1");
    }
    term.remove_suffix(1);
    blocks.push_back({number(term, raw), count});
  }
  if (trivial > std::numeric_limits<std::uint32_t>::max()) fail(raw, "trivial count too large");
  return build_element(group, std::move(blocks), static_cast<std::uint32_t>(trivial));
}

std::string format_element(const SemisimpleElement& g) {
  std::string out(1, family_letter(g.group().family));
  out += ":" + std::to_string(g.group().natural_dimension()) + ":";
  bool first = true;
  const auto term = [&](const std::string& base, std::uint32_t count) {
    if (!first) out += "+";
    first = false;
    out += base;
    if (count != 1) out += "*" + std::to_string(count);
  };
  for (const OrbitBlock& b : g.blocks()) term("phi(" + std::to_string(b.m) + ")", b.count);
  if (g.trivial_count() > 0) term("1", g.trivial_count());
  return out;
}

namespace {

BaseShape parse_factor(std::string_view f, const GroupTag& group, std::string_view whole) {
  const std::uint32_t rank = group.rank();
  const auto check = [&](std::uint32_t i) {
    if (i < 1 || i > rank) {
      fail(whole, "index " + std::to_string(i) + " outside [1, " + std::to_string(rank) + "]");
    }
    return i;
  };
  if (f == "spin") {
    if (group.family != Family::B) fail(whole, "spin needs family b");
    return Fund{group.n};
  }
  if (consume(f, "fund:")) return Fund{check(number(f, whole))};
  if (consume(f, "sum:")) {
    const auto parts = split(f, ',');
    if (parts.size() != 2) fail(whole, "sum needs two indices");
    std::uint32_t i = check(number(parts[0], whole));
    std::uint32_t j = check(number(parts[1], whole));
    if (i > j) std::swap(i, j);
    return SumTwoFund{i, j};
  }
  fail(whole, "unknown weight '" + std::string(f) + "'");
}

}  // namespace

WeightInput parse_weight(std::string_view raw, const GroupTag& group) {
  const std::string text = strip_spaces(raw);
  std::string_view s = text;
  if (consume(s, "omega:")) {
    CoefficientWeight w;
    for (std::string_view part : split(s, ',')) w.a.push_back(number(part, raw));
    if (w.a.size() != group.rank()) {
      fail(raw, "expected " + std::to_string(group.rank()) + " coefficients");
    }
    return w;
  }
  const std::vector<std::string_view> parts = split(s, '&');
  if (parts.size() == 1) {
    const BaseShape b = parse_factor(parts[0], group, raw);
    return std::visit([](const auto& x) -> WeightInput { return Shape{x}; }, b);
  }
  TwistedProduct t;
  for (std::string_view part : parts) t.factors.push_back(parse_factor(part, group, raw));
  return Shape{std::move(t)};
}

namespace {

std::string format_base(const BaseShape& b, const GroupTag& group) {
  if (const auto* f = std::get_if<Fund>(&b)) {
    if (group.family == Family::B && f->i == group.n) return "spin";
    return "fund:" + std::to_string(f->i);
  }
  const auto& s = std::get<SumTwoFund>(b);
  return "sum:" + std::to_string(s.i) + "," + std::to_string(s.j);
}

}  // namespace

std::string format_shape(const Shape& shape, const GroupTag& group) {
  if (const auto* t = std::get_if<TwistedProduct>(&shape)) {
    std::string out;
    for (const BaseShape& b : t->factors) {
      if (!out.empty()) out += "&";
      out += format_base(b, group);
    }
    return out;
  }
  return std::visit(
      [&](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, TwistedProduct>) {
          return {};
        } else {
          return format_base(BaseShape{x}, group);
        }
      },
      shape);
}

std::string format_weight(const WeightInput& w, const GroupTag& group) {
  if (const auto* c = std::get_if<CoefficientWeight>(&w)) {
    std::string out = "omega:";
    for (std::size_t j = 0; j < c->a.size(); ++j) {
      if (j > 0) out += ",";
      out += std::to_string(c->a[j]);
    }
    return out;
  }
  return format_shape(std::get<Shape>(w), group);
}

std::pair<std::uint32_t, std::uint32_t> parse_range(std::string_view raw) {
  const std::string text = strip_spaces(raw);
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const std::uint32_t v = number(text, raw);
    return {v, v};
  }
  const std::uint32_t lo = number(std::string_view(text).substr(0, dots), raw);
  const std::uint32_t hi = number(std::string_view(text).substr(dots + 2), raw);
  if (lo > hi) fail(raw, "empty range");
  return {lo, hi};
}

}  // namespace rateig
