#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "stabledeg/monomial.hpp"
#include "stabledeg/ring.hpp"

namespace stabledeg {

// Sparse polynomial in `dim` variables over a Ring. Terms are kept in
// canonical order (descending graded-lex) with no zero coefficients, so two
// polynomials are formally equal exactly when their term lists are equal.
// Semantics are formal: x^p is never reduced to x.
class Poly {
 public:
  struct Term {
    Monomial mono;
    RingElem coef;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {}

  static Poly constant(Ring ring, std::size_t dim, RingElem c);
  static Poly variable(Ring ring, std::size_t dim, std::size_t var);
  // Sorts, merges equal monomials and drops zero coefficients (coefficients
  // are reduced modulo the ring first).
  static Poly from_terms(Ring ring, std::size_t dim, std::vector<Term> terms);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  RingElem constant_term() const noexcept;
  RingElem coefficient(const Monomial& m) const noexcept;

  RingElem eval(std::span<const RingElem> x) const;

  Poly scaled(RingElem c) const;
  Poly operator-() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }

  Poly add_constant(RingElem c) const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  // Whether `terms` is already strictly descending with nonzero canonical
  // coefficients; used by tests to check idempotence of canonicalization.
  bool is_canonical() const noexcept;

 private:
  friend class PolyAccumulator;

  Ring ring_;
  std::size_t dim_;
  std::vector<Term> terms_;
};

// Hash-based coefficient accumulator: add many (monomial, coefficient) pairs
// and collect them into a canonical Poly.
class PolyAccumulator {
 public:
  PolyAccumulator(Ring ring, std::size_t dim, std::size_t expected = 0);
  ~PolyAccumulator();
  PolyAccumulator(PolyAccumulator&&) noexcept;
  PolyAccumulator& operator=(PolyAccumulator&&) noexcept;

  void add(const Monomial& m, RingElem c);
  // this += c * p
  void add_scaled(const Poly& p, RingElem c);
  // this += c * a * b
  void add_product(const Poly& a, const Poly& b, RingElem c);
  Poly take();

 private:
  struct Table;
  Ring ring_;
  std::size_t dim_;
  std::unique_ptr<Table> table_;
};

}  // namespace stabledeg
