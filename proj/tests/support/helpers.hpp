#pragma once

#include <cstdint>
#include <vector>

#include "stabledeg/poly_map.hpp"
#include "stabledeg/ring.hpp"
#include "stabledeg/rng.hpp"

namespace testsupport {

inline stabledeg::Ring F(std::uint64_t p) {
  return stabledeg::Ring::make(stabledeg::RingKind::prime_field, p);
}
inline stabledeg::Ring Z(std::uint64_t m) {
  return stabledeg::Ring::make(stabledeg::RingKind::residue_ring, m);
}

inline std::vector<stabledeg::RingElem> elems(const stabledeg::Ring& r,
                                              std::initializer_list<std::int64_t> v) {
  std::vector<stabledeg::RingElem> out;
  for (auto x : v) out.push_back(r.elem(x));
  return out;
}

inline std::vector<stabledeg::RingElem> random_vector(const stabledeg::Ring& r, std::size_t d,
                                                      stabledeg::Rng& rng) {
  std::vector<stabledeg::RingElem> v(d);
  for (auto& x : v) x = r.sample(rng);
  return v;
}

// Random map with `terms` terms per coordinate of total degree <= max_deg.
inline stabledeg::PolyMap random_map(const stabledeg::Ring& r, std::size_t d, std::size_t terms,
                                     unsigned max_deg, stabledeg::Rng& rng) {
  using stabledeg::Poly;
  std::vector<Poly> coords;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Poly::Term> t;
    for (std::size_t j = 0; j < terms; ++j) {
      std::vector<unsigned> e(d, 0);
      const auto deg = rng.below(max_deg + 1);
      for (std::uint64_t k = 0; k < deg; ++k) ++e[rng.below(d)];
      t.push_back({stabledeg::Monomial::from_exponents(e), r.sample(rng)});
    }
    coords.push_back(Poly::from_terms(r, d, std::move(t)));
  }
  return stabledeg::PolyMap(r, std::move(coords));
}

}  // namespace testsupport
