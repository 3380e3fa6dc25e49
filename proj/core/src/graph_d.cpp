#include "stabledeg/graph_d.hpp"

#include <charconv>

#include "incidence.hpp"
#include "stabledeg/error.hpp"

namespace stabledeg {

GraphD::GraphD(Ring ring, std::size_t n) : ring_(ring), n_(n == 1 ? 2 : n) {
  if (n == 0) throw Error(Errc::dimension_too_small, "D(n,K) needs n >= 1");
  rel_ = incidence_relations(n_);
}

void GraphD::check(const Vertex& v, Side side) const {
  if (v.side != side || v.coords.size() != n_) {
    throw Error(Errc::dimension_mismatch,
                std::string("expected a ") + (side == Side::point ? "point" : "line") + " of D(" +
                    std::to_string(n_) + ", " + ring_.tag() + ")");
  }
}

Vertex GraphD::zero(Side side) const { return {side, std::vector<RingElem>(n_, ring_.zero())}; }

Vertex GraphD::random_vertex(Side side, Rng& rng) const {
  Vertex v{side, std::vector<RingElem>(n_)};
  for (auto& c : v.coords) c = ring_.sample(rng);
  return v;
}

bool GraphD::incident(const Vertex& p, const Vertex& l) const {
  check(p, Side::point);
  check(l, Side::line);
  for (std::size_t j = 1; j < n_; ++j) {
    const RingElem lhs = ring_.sub(l.coords[j], p.coords[j]);
    if (lhs != ring_.mul(l.coords[rel_[j].a], p.coords[rel_[j].b])) return false;
  }
  return true;
}

Vertex GraphD::point_on(const Vertex& l, RingElem p1) const {
  check(l, Side::line);
  return {Side::point, detail::point_on<RingElem>(rel_, l.coords, p1, detail::NumericOps{ring_})};
}

Vertex GraphD::line_through(const Vertex& p, RingElem l1) const {
  check(p, Side::point);
  return {Side::line, detail::line_through<RingElem>(rel_, p.coords, l1, detail::NumericOps{ring_})};
}

Vertex GraphD::apply_X(const Vertex& v, RingElem alpha, RingElem beta) const {
  if (v.side == Side::point) return line_through(v, ring_.add(v.coords[0], alpha));
  return point_on(v, ring_.add(v.coords[0], beta));
}

Vertex GraphD::walk_apply(const Vertex& v, std::span<const RingElem> walk) const {
  Vertex cur = v;
  for (RingElem a : walk) cur = apply_N(cur, a);
  return cur;
}

PolyMap GraphD::walk_symbolic(std::span<const RingElem> walk) const {
  return walk_symbolic_from(PolyMap::identity(ring_, n_), walk);
}

PolyMap GraphD::walk_symbolic_from(const PolyMap& start, std::span<const RingElem> walk) const {
  if (!ring_.has_enough_regular()) {
    throw Error(Errc::insufficient_regular_elements,
                "ring " + ring_.tag() + " has fewer than 3 regular elements");
  }
  if (walk.size() % 2 != 0) {
    throw Error(Errc::invalid_argument, "a point-to-point walk needs an even number of colours");
  }
  if (!(start.ring() == ring_) || start.dim() != n_) {
    throw Error(Errc::dimension_mismatch, "start map does not act on points of this graph");
  }
  const detail::SymbolicOps ops;
  std::vector<Poly> cur(start.coords().begin(), start.coords().end());
  bool at_point = true;
  for (RingElem a : walk) {
    Poly first = cur[0].add_constant(a);
    cur = at_point ? detail::line_through<Poly>(rel_, cur, std::move(first), ops)
                   : detail::point_on<Poly>(rel_, cur, std::move(first), ops);
    at_point = !at_point;
  }
  return PolyMap(ring_, std::move(cur));
}

namespace {

// u_{i,j} and u'_{i,i} of a vertex, with the boundary values
// u_00 = -1, u'_00 = 1, u_01 = p_1 (points), u_10 = l_1 (lines), u'_11 = u_11;
// anything else outside the stored coordinates is 0.
class InvariantTerms {
 public:
  InvariantTerms(const Ring& ring, const Vertex& v) : ring_(ring), v_(v) {}

  RingElem u(std::ptrdiff_t i, std::ptrdiff_t j) const {
    if (i == 0 && j == 0) return ring_.elem(-1);
    if (i == 0 && j == 1) return v_.side == Side::point ? v_.coords[0] : ring_.zero();
    if (i == 1 && j == 0) return v_.side == Side::line ? v_.coords[0] : ring_.zero();
    if (i < 1 || j < 1) return ring_.zero();
    if (i == j) return stored(CoordClass::diag, static_cast<std::size_t>(i));
    if (j == i + 1) return stored(CoordClass::upper, static_cast<std::size_t>(i));
    if (i == j + 1) return stored(CoordClass::lower, static_cast<std::size_t>(j));
    return ring_.zero();
  }

  RingElem u_prime(std::ptrdiff_t i) const {
    if (i == 0) return ring_.one();
    if (i == 1) return u(1, 1);
    return stored(CoordClass::diag_prime, static_cast<std::size_t>(i));
  }

 private:
  RingElem stored(CoordClass cls, std::size_t i) const {
    const std::size_t idx = coord_index(cls, i);
    return idx < v_.coords.size() ? v_.coords[idx] : ring_.zero();
  }

  const Ring& ring_;
  const Vertex& v_;
};

}  // namespace

RingElem GraphD::invariant(const Vertex& v, std::size_t r) const {
  check(v, v.side);
  const InvariantTerms t(ring_, v);
  const auto rr = static_cast<std::ptrdiff_t>(r);
  RingElem acc = ring_.zero();
  for (std::ptrdiff_t i = 0; i <= rr; ++i) {
    acc = ring_.add(acc, ring_.mul(t.u(i, i), t.u_prime(rr - i)));
    acc = ring_.sub(acc, ring_.mul(t.u(i, i + 1), t.u(rr - i, rr - i - 1)));
  }
  return acc;
}

std::vector<RingElem> GraphD::invariant_vector(const Vertex& v) const {
  if (n_ < 6) {
    throw Error(Errc::dimension_too_small, "the invariant vector needs n >= 6, got " +
                                               std::to_string(n_));
  }
  const std::size_t t = (n_ + 2) / 4;
  std::vector<RingElem> a;
  for (std::size_t r = 2; r <= t; ++r) a.push_back(invariant(v, r));
  return a;
}

Vertex GraphD::parametrize_component_vertex(const Vertex& anchor, const Vertex& free) const {
  if (!ring_.is_field()) {
    throw Error(Errc::not_a_field, ring_.tag() + " is not a field");
  }
  check(free, anchor.side);
  const std::vector<RingElem> target = invariant_vector(anchor);
  Vertex w = free;
  // a_r = -u'_rr + (terms in coordinates fixed earlier), so each u'_rr is
  // read off after zeroing it.
  for (std::size_t r = 2; r < target.size() + 2; ++r) {
    const std::size_t idx = coord_index(CoordClass::diag_prime, r);
    w.coords[idx] = ring_.zero();
    w.coords[idx] = ring_.sub(invariant(w, r), target[r - 2]);
  }
  return w;
}

DWalk inverse_walk(std::span<const RingElem> walk, const Ring& ring) {
  DWalk inv;
  inv.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) inv.push_back(ring.neg(*it));
  return inv;
}

bool is_irreducible(std::span<const RingElem> walk) {
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (walk[i] == walk[i - 1]) return false;
  }
  return true;
}

bool is_non_backtracking(std::span<const RingElem> walk, const Ring& ring) {
  for (std::size_t i = 1; i < walk.size(); ++i) {
    if (walk[i] == ring.neg(walk[i - 1])) return false;
  }
  return true;
}

DWalk random_walk(const Ring& ring, std::size_t length, Rng& rng) {
  DWalk w;
  w.reserve(length);
  while (w.size() < length) {
    const RingElem a = ring.sample(rng);
    if (!w.empty() && a == ring.neg(w.back())) continue;
    w.push_back(a);
  }
  return w;
}

std::string join_residues(std::span<const RingElem> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i].value);
  }
  return out;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::vector<RingElem> parse_residues(std::string_view text, const Ring& ring) {
  std::vector<RingElem> out;
  text = strip(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::string_view tok =
        strip(text.substr(start, comma == text.npos ? text.npos : comma - start));
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
      throw Error(Errc::parse_error, "bad residue '" + std::string(tok) + "'");
    }
    out.push_back(ring.elem(v));
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Vertex& v) {
  return std::string(v.side == Side::point ? "P " : "L ") + join_residues(v.coords);
}

Vertex parse_vertex(std::string_view text, const Ring& ring) {
  text = strip(text);
  if (text.size() < 2 || (text[0] != 'P' && text[0] != 'L') || text[1] != ' ') {
    throw Error(Errc::parse_error, "a vertex is written 'P v1,...' or 'L v1,...'");
  }
  return {text[0] == 'P' ? Side::point : Side::line, parse_residues(text.substr(2), ring)};
}

std::string walk_to_string(std::span<const RingElem> walk) { return join_residues(walk); }

DWalk parse_walk(std::string_view text, const Ring& ring) { return parse_residues(text, ring); }

}  // namespace stabledeg
