#include "stabledeg/monomial.hpp"

#include <string>

#include "stabledeg/error.hpp"

namespace stabledeg {

namespace {

[[noreturn]] void overflow(std::size_t var, unsigned e) {
  throw Error(Errc::degree_overflow, "exponent " + std::to_string(e) + " of x" +
                                         std::to_string(var + 1) + " exceeds " +
                                         std::to_string(kMaxExponent));
}

}  // namespace

Monomial Monomial::variable(std::size_t var, unsigned exponent) {
  Monomial m;
  if (exponent == 0) return m;
  if (exponent > kMaxExponent) overflow(var, exponent);
  m.factors_.push_back(static_cast<Factor>(var << 8 | exponent));
  m.degree_ = exponent;
  return m;
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  Monomial m;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    const unsigned e = exponents[v];
    if (e == 0) continue;
    if (e > kMaxExponent) overflow(v, e);
    m.factors_.push_back(static_cast<Factor>(v << 8 | e));
    m.degree_ += e;
  }
  return m;
}

unsigned Monomial::exponent_of(std::size_t v) const noexcept {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (var(i) == v) return exp(i);
    if (var(i) > v) break;
  }
  return 0;
}

bool Monomial::is_squarefree() const noexcept {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (exp(i) != 1) return false;
  }
  return true;
}

std::vector<unsigned> Monomial::exponents(std::size_t dim) const {
  std::vector<unsigned> e(dim, 0);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (var(i) < dim) e[var(i)] = exp(i);
  }
  return e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    const std::size_t va = a.var(i), vb = b.var(j);
    if (va < vb) {
      r.factors_.push_back(a.factors_[i++]);
    } else if (vb < va) {
      r.factors_.push_back(b.factors_[j++]);
    } else {
      const unsigned e = a.exp(i) + b.exp(j);
      if (e > kMaxExponent) overflow(va, e);
      r.factors_.push_back(static_cast<Monomial::Factor>(va << 8 | e));
      ++i;
      ++j;
    }
  }
  while (i < a.factors_.size()) r.factors_.push_back(a.factors_[i++]);
  while (j < b.factors_.size()) r.factors_.push_back(b.factors_[j++]);
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial Monomial::drop_last() const {
  Monomial r = *this;
  Factor& last = r.factors_.back();
  if ((last & 0xffu) == 1) {
    r.factors_.pop_back();
  } else {
    --last;
  }
  --r.degree_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the packed factors.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Factor f : factors_) {
    h ^= f;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t va = a.var(i), vb = b.var(i);
    // The monomial that reaches the smaller variable first has the larger
    // exponent there while the other has 0.
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.exp(i) != b.exp(i)) return a.exp(i) <=> b.exp(i);
  }
  // Equal degree and one factor list is a prefix of the other: then the
  // lengths (and thus the monomials) must be equal.
  return a.factors_.size() <=> b.factors_.size();
}

}  // namespace stabledeg
