#include "stabledeg/poly_map.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>

#include "stabledeg/error.hpp"

namespace stabledeg {

PolyMap::PolyMap(Ring ring, std::vector<Poly> coords) : ring_(ring), coords_(std::move(coords)) {
  const std::size_t d = coords_.size();
  for (std::size_t i = 0; i < d; ++i) {
    if (!(coords_[i].ring() == ring_) || coords_[i].dim() != d) {
      throw Error(Errc::dimension_mismatch,
                  "coordinate " + std::to_string(i + 1) + " is not a polynomial over " +
                      ring_.tag() + " in " + std::to_string(d) + " variables");
    }
  }
}

PolyMap PolyMap::identity(Ring ring, std::size_t dim) {
  std::vector<Poly> coords;
  coords.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) coords.push_back(Poly::variable(ring, dim, i));
  return PolyMap(ring, std::move(coords));
}

std::vector<RingElem> PolyMap::eval(std::span<const RingElem> x) const {
  if (x.size() != dim()) {
    throw Error(Errc::dimension_mismatch, "vector of length " + std::to_string(x.size()) +
                                              " for a map of dimension " + std::to_string(dim()));
  }
  std::vector<RingElem> y;
  y.reserve(dim());
  for (const Poly& p : coords_) y.push_back(p.eval(x));
  return y;
}

unsigned PolyMap::degree() const noexcept {
  unsigned d = 0;
  for (const Poly& p : coords_) d = std::max(d, p.degree());
  return d;
}

std::size_t PolyMap::term_count() const noexcept {
  std::size_t n = 0;
  for (const Poly& p : coords_) n += p.size();
  return n;
}

bool PolyMap::is_identity() const noexcept {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const auto terms = coords_[i].terms();
    if (terms.size() != 1 || terms[0].coef != ring_.one() ||
        !(terms[0].mono == Monomial::variable(i))) {
      return false;
    }
  }
  return true;
}

namespace {

// Products of inner coordinates, memoized by monomial. Only proper prefixes
// are stored: the last factor of each outer term is multiplied straight into
// the accumulator.
class ProductCache {
 public:
  explicit ProductCache(const PolyMap& inner) : inner_(inner) {}

  const Poly& get(const Monomial& m) {
    if (m.degree() == 1) return inner_.coord(m.var(0));
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
    const Monomial prefix = m.drop_last();
    const std::size_t last = m.var(m.factor_count() - 1);
    Poly value = get(prefix) * inner_.coord(last);
    return cache_.emplace(m, std::move(value)).first->second;
  }

 private:
  const PolyMap& inner_;
  std::unordered_map<Monomial, Poly, MonomialHash> cache_;
};

}  // namespace

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (!(outer.ring() == inner.ring()) || outer.dim() != inner.dim()) {
    throw Error(Errc::dimension_mismatch,
                "cannot compose maps over " + outer.ring().tag() + "^" +
                    std::to_string(outer.dim()) + " and " + inner.ring().tag() + "^" +
                    std::to_string(inner.dim()));
  }
  if (outer.degree() * inner.degree() > kMaxExponent) {
    throw Error(Errc::degree_overflow, "composition degree " +
                                          std::to_string(outer.degree() * inner.degree()) +
                                          " exceeds " + std::to_string(kMaxExponent));
  }
  if (inner.is_identity()) return outer;
  if (outer.is_identity()) return inner;

  const Ring& ring = outer.ring();
  const std::size_t d = outer.dim();
  ProductCache cache(inner);
  std::vector<Poly> coords;
  coords.reserve(d);
  for (const Poly& f : outer.coords()) {
    PolyAccumulator acc(ring, d);
    for (const auto& t : f.terms()) {
      const Monomial& m = t.mono;
      if (m.is_constant()) {
        acc.add(m, t.coef);
      } else if (m.degree() == 1) {
        acc.add_scaled(inner.coord(m.var(0)), t.coef);
      } else {
        acc.add_product(cache.get(m.drop_last()), inner.coord(m.var(m.factor_count() - 1)),
                        t.coef);
      }
    }
    coords.push_back(acc.take());
  }
  return PolyMap(ring, std::move(coords));
}

PolyMap power(const PolyMap& f, std::uint64_t k,
              const std::function<void(const PolyMap&)>& on_step) {
  if (k == 0) throw Error(Errc::invalid_argument, "power exponent must be at least 1");
  std::optional<PolyMap> result;
  PolyMap base = f;
  for (;;) {
    if (k & 1) {
      if (result) {
        result = compose(*result, base);
        if (on_step) on_step(*result);
      } else {
        result = base;
      }
    }
    k >>= 1;
    if (k == 0) break;
    base = compose(base, base);
    if (on_step) on_step(base);
  }
  return *std::move(result);
}

DensityStats monomial_density(const PolyMap& f) {
  DensityStats s;
  const std::uint64_t d = f.dim();
  s.binom_d3 = d < 3 ? 0 : d * (d - 1) * (d - 2) / 6;
  s.coords.reserve(d);
  double ratio_sum = 0.0;
  for (const Poly& p : f.coords()) {
    DensityStats::Coord c;
    c.terms = p.size();
    for (const auto& t : p.terms()) {
      if (t.mono.degree() == 3 && t.mono.factor_count() == 3) ++c.cubic_squarefree;
    }
    s.cubic_squarefree += c.cubic_squarefree;
    s.terms += c.terms;
    if (s.binom_d3 > 0) {
      const double r = static_cast<double>(c.cubic_squarefree) / static_cast<double>(s.binom_d3);
      ratio_sum += r;
      s.max_ratio = std::max(s.max_ratio, r);
    }
    s.coords.push_back(c);
  }
  if (d > 0) s.ratio = ratio_sum / static_cast<double>(d);
  return s;
}

}  // namespace stabledeg
