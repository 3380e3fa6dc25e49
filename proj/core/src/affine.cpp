#include "stabledeg/affine.hpp"

#include <string>
#include <utility>

#include "stabledeg/error.hpp"

namespace stabledeg {

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_powers(std::uint64_t m) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;  // (p, p^e)
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    std::uint64_t q = 1;
    while (m % p == 0) {
      m /= p;
      q *= p;
    }
    out.emplace_back(p, q);
  }
  if (m > 1) out.emplace_back(m, m);
  return out;
}

// Gauss-Jordan over Z_{p^e}: pivots must be units, i.e. not divisible by p.
std::optional<std::vector<RingElem>> invert_prime_power(std::uint64_t p, const Ring& r,
                                                       std::size_t d,
                                                       std::span<const RingElem> a) {
  std::vector<RingElem> m(d * d), inv(d * d, r.zero());
  for (std::size_t i = 0; i < d * d; ++i) m[i] = r.from_unsigned(a[i].value);
  for (std::size_t i = 0; i < d; ++i) inv[i * d + i] = r.one();
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t piv = c;
    while (piv < d && m[piv * d + c].value % p == 0) ++piv;
    if (piv == d) return std::nullopt;
    if (piv != c) {
      for (std::size_t j = 0; j < d; ++j) {
        std::swap(m[piv * d + j], m[c * d + j]);
        std::swap(inv[piv * d + j], inv[c * d + j]);
      }
    }
    const RingElem s = *r.inverse(m[c * d + c]);
    for (std::size_t j = 0; j < d; ++j) {
      m[c * d + j] = r.mul(m[c * d + j], s);
      inv[c * d + j] = r.mul(inv[c * d + j], s);
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c) continue;
      const RingElem f = m[i * d + c];
      if (f.value == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        m[i * d + j] = r.sub(m[i * d + j], r.mul(f, m[c * d + j]));
        inv[i * d + j] = r.sub(inv[i * d + j], r.mul(f, inv[c * d + j]));
      }
    }
  }
  return inv;
}

std::vector<RingElem> mat_mul(const Ring& r, std::size_t d, std::span<const RingElem> a,
                              std::span<const RingElem> b) {
  std::vector<RingElem> c(d * d, r.zero());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const RingElem aik = a[i * d + k];
      if (aik.value == 0) continue;
      for (std::size_t j = 0; j < d; ++j) {
        c[i * d + j] = r.add(c[i * d + j], r.mul(aik, b[k * d + j]));
      }
    }
  }
  return c;
}

std::vector<RingElem> identity_matrix(const Ring& r, std::size_t d) {
  std::vector<RingElem> m(d * d, r.zero());
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = r.one();
  return m;
}

}  // namespace

std::optional<std::vector<RingElem>> invert_matrix(const Ring& ring, std::size_t dim,
                                                   std::span<const RingElem> matrix) {
  if (matrix.size() != dim * dim) {
    throw Error(Errc::dimension_mismatch, "matrix has " + std::to_string(matrix.size()) +
                                              " entries, expected " +
                                              std::to_string(dim * dim));
  }
  std::vector<RingElem> result(dim * dim, ring.zero());
  std::uint64_t modulus_so_far = 1;
  for (auto [p, q] : prime_powers(ring.modulus())) {
    const Ring rq = Ring::make(RingKind::residue_ring, q);
    auto part = invert_prime_power(p, rq, dim, matrix);
    if (!part) return std::nullopt;
    if (modulus_so_far == 1) {
      result = std::move(*part);
    } else {
      // x = x0 + M * ((a - x0) * M^{-1} mod q)
      const RingElem m_inv = *rq.inverse(rq.from_unsigned(modulus_so_far));
      for (std::size_t i = 0; i < dim * dim; ++i) {
        const RingElem x0 = rq.from_unsigned(result[i].value);
        const RingElem t = rq.mul(rq.sub((*part)[i], x0), m_inv);
        result[i] = RingElem{result[i].value + modulus_so_far * t.value};
      }
    }
    modulus_so_far *= q;
  }
  return result;
}

AffineMap::AffineMap(Unchecked, Ring ring, std::size_t dim, std::vector<RingElem> matrix,
                     std::vector<RingElem> shift, AffineForm form)
    : ring_(ring),
      dim_(dim),
      matrix_(std::move(matrix)),
      shift_(std::move(shift)),
      form_(form) {}

AffineMap::AffineMap(Ring ring, std::size_t dim, std::vector<RingElem> matrix,
                     std::vector<RingElem> shift, AffineForm form)
    : AffineMap(Unchecked{}, ring, dim, std::move(matrix), std::move(shift), form) {
  if (matrix_.size() != dim * dim || shift_.size() != dim) {
    throw Error(Errc::dimension_mismatch, "affine map of dimension " + std::to_string(dim) +
                                              " needs a " + std::to_string(dim) + "x" +
                                              std::to_string(dim) + " matrix and shift");
  }
  for (auto& e : matrix_) e = ring_.from_unsigned(e.value);
  for (auto& e : shift_) e = ring_.from_unsigned(e.value);
  if (form_ == AffineForm::first_row) {
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        const RingElem expect = i == j ? ring_.one() : ring_.zero();
        if (i != 0 && at(i, j) != expect) {
          throw Error(Errc::invalid_argument, "matrix is not in first-row form");
        }
      }
    }
    if (at(0, 0) != ring_.one()) throw Error(Errc::invalid_argument, "matrix is not in first-row form");
  } else if (!invert_matrix(ring_, dim_, matrix_)) {
    throw Error(Errc::singular_matrix, "determinant is not a regular element of " + ring_.tag());
  }
}

AffineMap AffineMap::identity(Ring ring, std::size_t dim) {
  return AffineMap(Unchecked{}, ring, dim, identity_matrix(ring, dim),
                   std::vector<RingElem>(dim, ring.zero()), AffineForm::first_row);
}

AffineMap AffineMap::random_first_row(Ring ring, std::size_t dim, Rng& rng) {
  auto m = identity_matrix(ring, dim);
  for (std::size_t j = 1; j < dim; ++j) m[j] = ring.sample_nonzero(rng);
  return AffineMap(Unchecked{}, ring, dim, std::move(m), std::vector<RingElem>(dim, ring.zero()),
                   AffineForm::first_row);
}

AffineMap AffineMap::random_monomial(Ring ring, std::size_t dim, Rng& rng) {
  std::vector<std::size_t> perm(dim);
  for (std::size_t i = 0; i < dim; ++i) perm[i] = i;
  for (std::size_t i = dim; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<RingElem> m(dim * dim, ring.zero());
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + perm[i]] = ring.sample_regular(rng);
  std::vector<RingElem> shift(dim);
  for (auto& s : shift) s = ring.sample(rng);
  return AffineMap(Unchecked{}, ring, dim, std::move(m), std::move(shift), AffineForm::dense);
}

AffineMap AffineMap::random_dense(Ring ring, std::size_t dim, Rng& rng) {
  auto lower = identity_matrix(ring, dim);
  auto upper = identity_matrix(ring, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      lower[i * dim + j] = ring.sample(rng);
      upper[j * dim + i] = ring.sample(rng);
    }
    lower[i * dim + i] = ring.sample_regular(rng);
  }
  auto m = mat_mul(ring, dim, lower, upper);
  std::vector<RingElem> shift(dim);
  for (auto& s : shift) s = ring.sample(rng);
  return AffineMap(Unchecked{}, ring, dim, std::move(m), std::move(shift), AffineForm::dense);
}

std::vector<RingElem> AffineMap::apply(std::span<const RingElem> x) const {
  if (x.size() != dim_) {
    throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(x.size()) +
                                              " for an affine map of dimension " +
                                              std::to_string(dim_));
  }
  std::vector<RingElem> y(dim_);
  if (form_ == AffineForm::first_row) {
    RingElem acc = shift_.empty() ? ring_.zero() : shift_[0];
    for (std::size_t j = 0; j < dim_; ++j) acc = ring_.add(acc, ring_.mul(matrix_[j], x[j]));
    y[0] = acc;
    for (std::size_t i = 1; i < dim_; ++i) y[i] = ring_.add(x[i], shift_[i]);
    return y;
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    RingElem acc = shift_[i];
    for (std::size_t j = 0; j < dim_; ++j) {
      const RingElem a = matrix_[i * dim_ + j];
      if (a.value != 0) acc = ring_.add(acc, ring_.mul(a, x[j]));
    }
    y[i] = acc;
  }
  return y;
}

PolyMap AffineMap::to_map() const {
  std::vector<Poly> coords;
  coords.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::vector<Poly::Term> terms;
    for (std::size_t j = 0; j < dim_; ++j) {
      const RingElem a = matrix_[i * dim_ + j];
      if (a.value != 0) terms.push_back({Monomial::variable(j), a});
    }
    if (shift_[i].value != 0) terms.push_back({Monomial{}, shift_[i]});
    coords.push_back(Poly::from_terms(ring_, dim_, std::move(terms)));
  }
  return PolyMap(ring_, std::move(coords));
}

AffineMap AffineMap::inverse() const {
  std::vector<RingElem> inv;
  if (form_ == AffineForm::first_row) {
    inv = matrix_;
    for (std::size_t j = 1; j < dim_; ++j) inv[j] = ring_.neg(inv[j]);
  } else {
    auto m = invert_matrix(ring_, dim_, matrix_);
    if (!m) throw Error(Errc::singular_matrix, "determinant is not a regular element");
    inv = std::move(*m);
  }
  // A^{-1}(y - s) = A^{-1} y - A^{-1} s
  AffineMap linear(Unchecked{}, ring_, dim_, std::move(inv),
                   std::vector<RingElem>(dim_, ring_.zero()), form_);
  std::vector<RingElem> shift = linear.apply(shift_);
  for (auto& s : shift) s = ring_.neg(s);
  linear.shift_ = std::move(shift);
  return linear;
}

std::size_t AffineMap::nonzero_count() const noexcept {
  std::size_t n = 0;
  for (RingElem e : matrix_) n += e.value != 0;
  for (RingElem e : shift_) n += e.value != 0;
  return n;
}

}  // namespace stabledeg
