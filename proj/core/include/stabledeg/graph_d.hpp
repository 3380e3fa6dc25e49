#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabledeg/coords.hpp"
#include "stabledeg/poly_map.hpp"
#include "stabledeg/ring.hpp"
#include "stabledeg/rng.hpp"

namespace stabledeg {

enum class Side { point, line };

struct Vertex {
  Side side = Side::point;
  std::vector<RingElem> coords;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Colour sequence of a walk; applied one N operator per entry.
using DWalk = std::vector<RingElem>;

// The bipartite graph D(n,K): points and lines are vectors of K^n, and (p)
// is incident to [l] when the first n - 1 relations
//   l_11 - p_11 = l_1 p_1,  l_12 - p_12 = l_11 p_1,  l_21 - p_21 = l_1 p_11,
//   l_ii - p_ii = l_1 p_{i-1,i},  l'_ii - p'_ii = l_{i,i-1} p_1,
//   l_{i,i+1} - p_{i,i+1} = l_ii p_1,  l_{i+1,i} - p_{i+1,i} = l_1 p'_ii
// hold. D(1,K) is the same graph as D(2,K).
//
// Colours: a point moved by colour a lands on the line with l_1 = p_1 + a; a
// line moved by colour b lands on the point with p_1 = l_1 + b. With that,
// X(a,b) followed by X(-b,-a) is the identity.
class GraphD {
 public:
  // Throws Error{dimension_too_small} for n == 0.
  GraphD(Ring ring, std::size_t n);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return n_; }
  std::span<const Relation> relations() const noexcept { return rel_; }

  Vertex zero(Side side) const;
  Vertex random_vertex(Side side, Rng& rng) const;

  // Throws Error{dimension_mismatch} unless p is a point and l a line of this graph.
  bool incident(const Vertex& p, const Vertex& l) const;
  Vertex point_on(const Vertex& l, RingElem p1) const;
  Vertex line_through(const Vertex& p, RingElem l1) const;

  // Neighbour of a point along colour alpha, or of a line along colour beta.
  Vertex apply_X(const Vertex& v, RingElem alpha, RingElem beta) const;
  Vertex apply_N(const Vertex& v, RingElem alpha) const { return apply_X(v, alpha, alpha); }
  Vertex walk_apply(const Vertex& v, std::span<const RingElem> walk) const;

  // The walk applied to the symbolic point (x1, ..., xn). The walk must have
  // even length so that it maps points to points. Throws
  // Error{insufficient_regular_elements} for rings with fewer than 3 units.
  PolyMap walk_symbolic(std::span<const RingElem> walk) const;
  // The walk applied to the symbolic point `start` (a map K^n -> K^n), so the
  // result is walk o start.
  PolyMap walk_symbolic_from(const PolyMap& start, std::span<const RingElem> walk) const;

  // (a_2, ..., a_t), t = floor((n + 2) / 4). Throws Error{dimension_too_small}
  // for n < 6.
  std::vector<RingElem> invariant_vector(const Vertex& v) const;
  RingElem invariant(const Vertex& v, std::size_t r) const;

  // `free` with every u'_rr (2 <= r <= t) replaced by the unique value that
  // makes its invariant vector equal the anchor's. Throws Error{not_a_field}
  // over rings that are not fields.
  Vertex parametrize_component_vertex(const Vertex& anchor, const Vertex& free) const;

 private:
  void check(const Vertex& v, Side side) const;

  Ring ring_;
  std::size_t n_;
  std::vector<Relation> rel_;
};

// Reversed colours, each negated.
DWalk inverse_walk(std::span<const RingElem> walk, const Ring& ring);
// Consecutive colours differ.
bool is_irreducible(std::span<const RingElem> walk);
// No step returns to the vertex just left: alpha_{i+1} != -alpha_i.
bool is_non_backtracking(std::span<const RingElem> walk, const Ring& ring);
// Uniform non-backtracking walk with colours in K.
DWalk random_walk(const Ring& ring, std::size_t length, Rng& rng);

// "P 1,2,3" / "L 1,2,3"
std::string to_string(const Vertex& v);
Vertex parse_vertex(std::string_view text, const Ring& ring);
// "1,2,3"
std::string walk_to_string(std::span<const RingElem> walk);
DWalk parse_walk(std::string_view text, const Ring& ring);

// Comma-separated residues; shared by the vertex, flag and vector text forms.
std::string join_residues(std::span<const RingElem> values);
std::vector<RingElem> parse_residues(std::string_view text, const Ring& ring);

}  // namespace stabledeg
