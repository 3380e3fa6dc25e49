#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace stabledeg {

inline constexpr unsigned kMaxExponent = 255;

// x_{v1}^{e1} * x_{v2}^{e2} * ... stored sparsely as (variable, exponent)
// factors sorted by variable index. Variables are 0-based here; the text
// format prints them 1-based (x1 is variable 0).
class Monomial {
 public:
  Monomial() = default;  // the constant monomial 1

  static Monomial variable(std::size_t var, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);

  unsigned degree() const noexcept { return degree_; }
  bool is_constant() const noexcept { return factors_.empty(); }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  std::size_t var(std::size_t i) const noexcept { return factors_[i] >> 8; }
  unsigned exp(std::size_t i) const noexcept { return factors_[i] & 0xffu; }
  unsigned exponent_of(std::size_t var) const noexcept;
  // Largest variable index + 1, or 0 for the constant monomial.
  std::size_t span_dim() const noexcept { return factors_.empty() ? 0 : var(factors_.size() - 1) + 1; }
  bool is_squarefree() const noexcept;
  std::vector<unsigned> exponents(std::size_t dim) const;

  // Throws Error{degree_overflow} when an exponent would exceed kMaxExponent.
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  // Monomial with the last factor's exponent reduced by one (the "prefix" used
  // by composition caches); requires !is_constant().
  Monomial drop_last() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }

  // Graded lexicographic order with x1 most significant: a > b when a has the
  // higher total degree, or equal degree and a larger exponent at the first
  // variable where the exponent vectors differ.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept;

 private:
  using Factor = std::uint32_t;  // var << 8 | exponent
  boost::container::small_vector<Factor, 4> factors_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace stabledeg
