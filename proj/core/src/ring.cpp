#include "stabledeg/ring.hpp"

#include <cctype>
#include <charconv>

#include "stabledeg/error.hpp"

namespace stabledeg {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  // Trial division is deterministic and cheap below 2^32 (at most 2^15 odd divisors).
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t euler_totient(std::uint64_t m) noexcept {
  std::uint64_t result = m;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

Ring::Ring(RingKind kind, std::uint64_t modulus)
    : kind_(kind),
      modulus_(modulus),
      mask_(modulus - 1),
      pow2_((modulus & (modulus - 1)) == 0),
      field_(is_prime(modulus)),
      regular_count_(euler_totient(modulus)) {}

Ring Ring::make(RingKind kind, std::uint64_t modulus) {
  if (modulus < 2) throw Error(Errc::modulus_too_small, "modulus must be at least 2");
  if (modulus > kMaxModulus) throw Error(Errc::modulus_too_large, "modulus must be at most 2^32");
  if (kind == RingKind::prime_field && !is_prime(modulus)) {
    throw Error(Errc::non_prime_modulus, std::to_string(modulus) + " is not prime");
  }
  return Ring(kind, modulus);
}

Ring Ring::parse(std::string_view tag) {
  auto bad = [&] { return Error(Errc::parse_error, "bad ring tag '" + std::string(tag) + "'"); };
  std::size_t pos = 0;
  while (pos < tag.size() && std::isspace(static_cast<unsigned char>(tag[pos]))) ++pos;
  if (pos >= tag.size()) throw bad();
  RingKind kind;
  switch (tag[pos]) {
    case 'Z': kind = RingKind::residue_ring; break;
    case 'F': kind = RingKind::prime_field; break;
    default: throw bad();
  }
  ++pos;
  if (pos >= tag.size() || (tag[pos] != ' ' && tag[pos] != ':')) throw bad();
  ++pos;
  std::uint64_t modulus = 0;
  auto [end, ec] = std::from_chars(tag.data() + pos, tag.data() + tag.size(), modulus);
  if (ec != std::errc() || end == tag.data() + pos) throw bad();
  for (const char* p = end; p != tag.data() + tag.size(); ++p) {
    if (!std::isspace(static_cast<unsigned char>(*p))) throw bad();
  }
  return make(kind, modulus);
}

std::string Ring::tag() const {
  return std::string(kind_ == RingKind::prime_field ? "F " : "Z ") + std::to_string(modulus_);
}

RingElem Ring::elem(std::int64_t v) const noexcept {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r)};
}

RingElem Ring::pow(RingElem a, std::uint64_t e) const noexcept {
  RingElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::optional<RingElem> Ring::inverse(RingElem a) const noexcept {
  // Extended Euclid on signed 64-bit; all magnitudes stay below 2^33.
  std::int64_t r0 = static_cast<std::int64_t>(modulus_), r1 = static_cast<std::int64_t>(a.value);
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  return elem(t0);
}

bool Ring::is_regular(RingElem a) const noexcept {
  if (a.value == 0) return false;
  if (field_) return true;
  std::uint64_t x = modulus_, y = a.value;
  while (y != 0) {
    std::uint64_t t = x % y;
    x = y;
    y = t;
  }
  return x == 1;
}

RingElem Ring::sample_regular(Rng& rng) const {
  if (!has_enough_regular()) {
    throw Error(Errc::insufficient_regular_elements,
                "ring " + tag() + " has fewer than 3 regular elements");
  }
  for (;;) {
    RingElem x = sample(rng);
    if (is_regular(x)) return x;
  }
}

}  // namespace stabledeg
