#include "rateig/cyclo.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "rateig/error.hpp"

namespace rateig {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::EvenOrder: return "EvenOrder";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::EnumerationLimit: return "EnumerationLimit";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::uint32_t euler_phi(std::uint32_t m) {
  check_modulus(m);
  std::uint32_t result = m;
  std::uint32_t rest = m;
  for (std::uint32_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

std::uint32_t multiplicative_order(std::uint32_t a, std::uint32_t m) {
  if (m < 2 || std::gcd(a, m) != 1) {
    throw Error(ErrorCode::OutOfRange, "multiplicative order needs gcd(a, m) = 1 and m > 1");
  }
  std::uint64_t x = a % m;
  std::uint32_t e = 1;
  while (x != 1) {
    x = x * a % m;
    ++e;
  }
  return e;
}

void check_modulus(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidModulus, "modulus must be positive");
  if (m > kMaxModulus) {
    throw Error(ErrorCode::ModulusTooLarge,
                "modulus " + std::to_string(m) + " exceeds limit " + std::to_string(kMaxModulus));
  }
}

std::uint32_t common_modulus(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = lcm_u64(a, b);
  check_modulus(l);
  return static_cast<std::uint32_t>(l);
}

// ---------------------------------------------------------------------------
// RootExp

RootExp::RootExp(std::uint32_t modulus, std::int64_t exponent) : modulus_(modulus) {
  check_modulus(modulus);
  const std::int64_t m = modulus;
  exponent_ = static_cast<std::uint32_t>(((exponent % m) + m) % m);
}

std::uint32_t RootExp::order() const noexcept {
  return modulus_ / static_cast<std::uint32_t>(std::gcd(exponent_, modulus_));
}

bool RootExp::is_canonical() const noexcept {
  return exponent_ == 0 ? modulus_ == 1 : std::gcd(exponent_, modulus_) == 1;
}

RootExp RootExp::canonical() const {
  const std::uint32_t g = std::gcd(exponent_, modulus_);
  return RootExp(modulus_ / g, exponent_ / g);
}

RootExp RootExp::rescaled(std::uint32_t target_modulus) const {
  if (target_modulus % modulus_ != 0) {
    throw Error(ErrorCode::InvalidModulus, "rescale target must be a multiple of the modulus");
  }
  return RootExp(target_modulus,
                 static_cast<std::int64_t>(exponent_) * (target_modulus / modulus_));
}

std::string RootExp::to_string() const {
  const RootExp c = canonical();
  return "ζ_" + std::to_string(c.modulus_) + "^" + std::to_string(c.exponent_);
}

bool operator==(const RootExp& a, const RootExp& b) noexcept {
  const std::uint64_t l = lcm_u64(a.modulus_, b.modulus_);
  return static_cast<std::uint64_t>(a.exponent_) * (l / a.modulus_) ==
         static_cast<std::uint64_t>(b.exponent_) * (l / b.modulus_);
}

// ---------------------------------------------------------------------------
// RootSet

namespace {

std::size_t word_count(std::uint32_t modulus) { return (modulus + 63) / 64; }

// Bits [pos, pos + len) of a bitmap, len in [1, 64]; the range must lie inside
// the stored bits.
std::uint64_t read_bits(const std::vector<std::uint64_t>& words, std::uint64_t pos, unsigned len) {
  const std::size_t wi = pos >> 6;
  const unsigned off = pos & 63;
  std::uint64_t bits = words[wi] >> off;
  if (off != 0 && off + len > 64) bits |= words[wi + 1] << (64 - off);
  if (len < 64) bits &= (std::uint64_t{1} << len) - 1;
  return bits;
}

}  // namespace

RootSet::RootSet(std::uint32_t modulus) : modulus_(modulus) {
  check_modulus(modulus);
  words_.assign(word_count(modulus), 0);
}

RootSet RootSet::from_residues(std::uint32_t modulus, std::span<const std::uint32_t> residues) {
  RootSetBuilder b(modulus);
  for (std::uint32_t e : residues) b.insert(e);
  return std::move(b).build();
}

RootSet RootSet::from_residues(std::uint32_t modulus,
                               std::initializer_list<std::uint32_t> residues) {
  return from_residues(modulus, std::span<const std::uint32_t>(residues.begin(), residues.size()));
}

bool RootSet::contains(std::uint64_t residue) const noexcept {
  const std::uint64_t e = residue % modulus_;
  return (words_[e >> 6] >> (e & 63)) & 1u;
}

std::size_t RootSet::size() const noexcept {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::uint32_t> RootSet::residues() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<std::uint32_t>(wi * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

RootSet RootSet::rescaled(std::uint32_t target_modulus) const {
  if (target_modulus == modulus_) return *this;
  check_modulus(target_modulus);
  if (target_modulus % modulus_ != 0) {
    throw Error(ErrorCode::InvalidModulus, "rescale target " + std::to_string(target_modulus) +
                                               " is not a multiple of " + std::to_string(modulus_));
  }
  const std::uint32_t k = target_modulus / modulus_;
  RootSetBuilder b(target_modulus);
  for (std::uint32_t e : residues()) b.insert(static_cast<std::uint64_t>(e) * k);
  return std::move(b).build();
}

std::uint32_t RootSet::minimal_modulus() const {
  std::uint32_t g = modulus_;
  for (std::uint32_t e : residues()) g = std::gcd(g, e);
  return modulus_ / g;
}

std::string RootSet::to_string() const {
  std::ostringstream os;
  os << "mod " << modulus_ << ": {";
  bool first = true;
  for (std::uint32_t e : residues()) {
    if (!first) os << ',';
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

bool operator==(const RootSet& a, const RootSet& b) {
  if (a.modulus_ == b.modulus_) return a.words_ == b.words_;
  const std::uint32_t m = common_modulus(a.modulus_, b.modulus_);
  return a.rescaled(m).words_ == b.rescaled(m).words_;
}

// ---------------------------------------------------------------------------
// RootSetBuilder

RootSetBuilder::RootSetBuilder(std::uint32_t modulus) : set_(modulus) {}

void RootSetBuilder::insert(std::uint64_t residue) {
  const std::uint64_t e = residue % set_.modulus_;
  set_.words_[e >> 6] |= std::uint64_t{1} << (e & 63);
}

void RootSetBuilder::merge(const RootSet& other) {
  if (other.modulus_ != set_.modulus_) {
    throw Error(ErrorCode::InvalidModulus, "merge requires equal moduli");
  }
  for (std::size_t i = 0; i < set_.words_.size(); ++i) set_.words_[i] |= other.words_[i];
}

void RootSetBuilder::merge_shifted(const RootSet& src, std::uint32_t shift) {
  const std::uint32_t m = set_.modulus_;
  if (src.modulus_ != m) throw Error(ErrorCode::InvalidModulus, "merge requires equal moduli");
  shift %= m;
  if (shift == 0) {
    merge(src);
    return;
  }
  // Destination bit j receives source bit (j - shift) mod m.
  for (std::size_t w = 0; w < set_.words_.size(); ++w) {
    const std::uint32_t base = static_cast<std::uint32_t>(w * 64);
    const unsigned len = static_cast<unsigned>(std::min<std::uint32_t>(64, m - base));
    const std::uint32_t start = (base + m - shift) % m;
    const unsigned first = static_cast<unsigned>(std::min<std::uint32_t>(len, m - start));
    std::uint64_t bits = read_bits(src.words_, start, first);
    if (first < len) bits |= read_bits(src.words_, 0, len - first) << first;
    set_.words_[w] |= bits;
  }
}

RootSet RootSetBuilder::build() && { return std::move(set_); }

// ---------------------------------------------------------------------------
// Free functions

RootSet all_roots(std::uint32_t m) {
  RootSetBuilder b(m);
  for (std::uint32_t e = 0; e < m; ++e) b.insert(e);
  return std::move(b).build();
}

RootSet primitive_roots(std::uint32_t m) {
  RootSetBuilder b(m);
  for (std::uint32_t e = 0; e < m; ++e) {
    if (std::gcd(e, m) == 1) b.insert(e);
  }
  return std::move(b).build();
}

RootSet product_set(const RootSet& a, const RootSet& b) {
  const std::uint32_t m = common_modulus(a.modulus(), b.modulus());
  const RootSet ra = a.rescaled(m);
  const RootSet rb = b.rescaled(m);
  const bool a_smaller = ra.size() <= rb.size();
  const RootSet& small = a_smaller ? ra : rb;
  const RootSet& large = a_smaller ? rb : ra;
  RootSetBuilder out(m);
  for (std::uint32_t e : small.residues()) out.merge_shifted(large, e);
  return std::move(out).build();
}

RootSet inverse_set(const RootSet& a) {
  const std::uint32_t m = a.modulus();
  RootSetBuilder b(m);
  for (std::uint32_t e : a.residues()) b.insert((m - e) % m);
  return std::move(b).build();
}

RootSet galois_orbit(const RootExp& r) {
  const std::uint32_t m = r.modulus();
  RootSetBuilder b(m);
  for (std::uint32_t i = 1; i <= m; ++i) {
    if (std::gcd(i, m) == 1) b.insert(static_cast<std::uint64_t>(i) * r.exponent());
  }
  return std::move(b).build();
}

RootSet galois_image(const RootSet& a, std::uint32_t unit) {
  const std::uint32_t m = a.modulus();
  if (std::gcd(unit % m, m) != 1) {
    throw Error(ErrorCode::OutOfRange, "Galois action needs a unit of Z/M");
  }
  RootSetBuilder b(m);
  for (std::uint32_t e : a.residues()) b.insert(static_cast<std::uint64_t>(e) * unit);
  return std::move(b).build();
}

bool is_galois_closed(const RootSet& a) {
  const std::uint32_t m = a.modulus();
  for (std::uint32_t i = 2; i < m; ++i) {
    if (std::gcd(i, m) == 1 && !(galois_image(a, i) == a)) return false;
  }
  return true;
}

RootSet rescale(const RootSet& s, std::uint32_t target_modulus) {
  return s.rescaled(target_modulus);
}

namespace {

template <typename Op>
RootSet combine(const RootSet& a, const RootSet& b, Op op) {
  const std::uint32_t m = common_modulus(a.modulus(), b.modulus());
  const RootSet ra = a.rescaled(m);
  const RootSet rb = b.rescaled(m);
  RootSetBuilder out(m);
  for (std::uint32_t e = 0; e < m; ++e) {
    if (op(ra.contains(e), rb.contains(e))) out.insert(e);
  }
  return std::move(out).build();
}

}  // namespace

RootSet set_union(const RootSet& a, const RootSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

RootSet set_intersection(const RootSet& a, const RootSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

RootSet set_difference(const RootSet& a, const RootSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

RootSet complement(const RootSet& a) {
  return set_difference(all_roots(a.modulus()), a);
}

bool is_subset(const RootSet& a, const RootSet& b) {
  const std::uint32_t m = common_modulus(a.modulus(), b.modulus());
  const RootSet ra = a.rescaled(m);
  const RootSet rb = b.rescaled(m);
  for (std::uint32_t e : ra.residues()) {
    if (!rb.contains(e)) return false;
  }
  return true;
}

}  // namespace rateig
