#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stabledeg/rng.hpp"

namespace stabledeg {

// A canonical residue in [0, modulus) of some Ring. The ring itself is not
// stored; arithmetic goes through Ring so the modulus is never ambiguous.
struct RingElem {
  std::uint64_t value = 0;

  friend constexpr bool operator==(RingElem, RingElem) = default;
  friend constexpr auto operator<=>(RingElem, RingElem) = default;
};

enum class RingKind { prime_field, residue_ring };

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 32;

bool is_prime(std::uint64_t n) noexcept;

// Finite commutative ring Z_m or F_p with m <= 2^32, so a product of two
// canonical residues always fits in 64 bits.
class Ring {
 public:
  // Throws Error{modulus_too_small | modulus_too_large | non_prime_modulus}.
  static Ring make(RingKind kind, std::uint64_t modulus);

  // Accepts the file tag "Z 256" / "F 127" and the CLI spelling "Z:256".
  static Ring parse(std::string_view tag);

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return field_; }

  // "Z 256" or "F 127".
  std::string tag() const;

  RingElem zero() const noexcept { return {0}; }
  RingElem one() const noexcept { return {1 % modulus_}; }
  RingElem elem(std::int64_t v) const noexcept;
  RingElem from_unsigned(std::uint64_t v) const noexcept { return {reduce(v)}; }

  RingElem add(RingElem a, RingElem b) const noexcept {
    std::uint64_t s = a.value + b.value;
    return {s >= modulus_ ? s - modulus_ : s};
  }
  RingElem sub(RingElem a, RingElem b) const noexcept {
    return {a.value >= b.value ? a.value - b.value : a.value + modulus_ - b.value};
  }
  RingElem neg(RingElem a) const noexcept { return {a.value == 0 ? 0 : modulus_ - a.value}; }
  RingElem mul(RingElem a, RingElem b) const noexcept { return {reduce(a.value * b.value)}; }

  // Reduce an arbitrary 64-bit value.
  std::uint64_t reduce(std::uint64_t x) const noexcept {
    return pow2_ ? (x & mask_) : (x % modulus_);
  }

  RingElem pow(RingElem a, std::uint64_t e) const noexcept;
  std::optional<RingElem> inverse(RingElem a) const noexcept;

  // Non-zero and not a zero divisor; for a finite ring that is the same as a unit.
  bool is_regular(RingElem a) const noexcept;
  std::uint64_t regular_count() const noexcept { return regular_count_; }
  // |Reg(K)| >= 3, the hypothesis of the stable-degree constructions.
  bool has_enough_regular() const noexcept { return regular_count_ >= 3; }

  RingElem sample(Rng& rng) const { return {rng.below(modulus_)}; }
  RingElem sample_nonzero(Rng& rng) const { return {1 + rng.below(modulus_ - 1)}; }
  // Uniform over Reg(K). Throws Error{insufficient_regular_elements} when
  // has_enough_regular() is false.
  RingElem sample_regular(Rng& rng) const;

  friend bool operator==(const Ring& a, const Ring& b) noexcept {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  Ring(RingKind kind, std::uint64_t modulus);

  RingKind kind_;
  std::uint64_t modulus_;
  std::uint64_t mask_;
  bool pow2_;
  bool field_;
  std::uint64_t regular_count_;
};

std::uint64_t euler_totient(std::uint64_t m) noexcept;

}  // namespace stabledeg
