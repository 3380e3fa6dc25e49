#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "stabledeg/poly.hpp"

namespace stabledeg {

// A polynomial transformation K^d -> K^d, x |-> (f_1(x), ..., f_d(x)).
class PolyMap {
 public:
  // Throws Error{dimension_mismatch} unless there are exactly d coordinates,
  // each over `ring` in d variables.
  PolyMap(Ring ring, std::vector<Poly> coords);

  static PolyMap identity(Ring ring, std::size_t dim);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Poly> coords() const noexcept { return coords_; }
  const Poly& coord(std::size_t i) const { return coords_.at(i); }

  std::vector<RingElem> eval(std::span<const RingElem> x) const;

  // Max total degree over all stored terms; 0 for a constant map.
  unsigned degree() const noexcept;
  std::size_t term_count() const noexcept;
  bool is_identity() const noexcept;

  friend bool operator==(const PolyMap& a, const PolyMap& b) noexcept {
    return a.ring_ == b.ring_ && a.coords_ == b.coords_;
  }

 private:
  Ring ring_;
  std::vector<Poly> coords_;
};

// outer o inner: inner is applied first. Throws Error{dimension_mismatch} for
// incompatible maps and Error{degree_overflow} when deg(outer) * deg(inner)
// exceeds the exponent cap.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

// f^k by square-and-multiply. `on_step`, when given, sees every intermediate
// product right after it is collected.
PolyMap power(const PolyMap& f, std::uint64_t k,
              const std::function<void(const PolyMap&)>& on_step = {});

struct DensityStats {
  struct Coord {
    std::size_t cubic_squarefree = 0;  // terms x_i x_j x_k, i < j < k
    std::size_t terms = 0;
  };
  std::vector<Coord> coords;
  std::size_t cubic_squarefree = 0;
  std::size_t terms = 0;
  std::uint64_t binom_d3 = 0;  // C(d, 3)
  // Mean over coordinates of cubic_squarefree / C(d, 3); 0 when d < 3.
  double ratio = 0.0;
  double max_ratio = 0.0;
};

DensityStats monomial_density(const PolyMap& f);

}  // namespace stabledeg
