#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stabledeg/poly_map.hpp"
#include "stabledeg/ring.hpp"
#include "stabledeg/rng.hpp"

namespace stabledeg {

enum class AffineForm {
  dense,
  // Unit diagonal; off-diagonal entries only in the first row. det = 1.
  first_row,
};

// x |-> A x + s over K^d. A is stored row-major.
class AffineMap {
 public:
  // Throws Error{singular_matrix} unless det(A) is regular, and
  // Error{dimension_mismatch} for inconsistent sizes. A first_row form is
  // checked for its shape.
  AffineMap(Ring ring, std::size_t dim, std::vector<RingElem> matrix, std::vector<RingElem> shift,
            AffineForm form = AffineForm::dense);

  static AffineMap identity(Ring ring, std::size_t dim);
  // First-row form with every row-1 off-diagonal entry nonzero and zero shift.
  static AffineMap random_first_row(Ring ring, std::size_t dim, Rng& rng);
  // Permutation matrix times a diagonal of regular elements, random shift.
  // Conjugating by it keeps sparse maps sparse.
  static AffineMap random_monomial(Ring ring, std::size_t dim, Rng& rng);
  // Product of random unit-triangular matrices with a regular diagonal and a
  // random shift; invertible by construction.
  static AffineMap random_dense(Ring ring, std::size_t dim, Rng& rng);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  AffineForm form() const noexcept { return form_; }
  RingElem at(std::size_t row, std::size_t col) const { return matrix_.at(row * dim_ + col); }
  std::span<const RingElem> shift() const noexcept { return shift_; }

  std::vector<RingElem> apply(std::span<const RingElem> x) const;
  PolyMap to_map() const;
  AffineMap inverse() const;

  // Entries of A plus shift that are nonzero: the work of one application.
  std::size_t nonzero_count() const noexcept;

  friend bool operator==(const AffineMap& a, const AffineMap& b) noexcept {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.matrix_ == b.matrix_ &&
           a.shift_ == b.shift_;
  }

 private:
  struct Unchecked {};
  AffineMap(Unchecked, Ring ring, std::size_t dim, std::vector<RingElem> matrix,
            std::vector<RingElem> shift, AffineForm form);

  Ring ring_;
  std::size_t dim_;
  std::vector<RingElem> matrix_;
  std::vector<RingElem> shift_;
  AffineForm form_;
};

// Inverse of a square matrix over Z_m or F_p (row-major), or nullopt when the
// determinant is not regular. Works prime power by prime power and recombines
// with the Chinese remainder theorem.
std::optional<std::vector<RingElem>> invert_matrix(const Ring& ring, std::size_t dim,
                                                   std::span<const RingElem> matrix);

}  // namespace stabledeg
