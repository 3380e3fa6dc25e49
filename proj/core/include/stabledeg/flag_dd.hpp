#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stabledeg/graph_d.hpp"
#include "stabledeg/poly_map.hpp"

namespace stabledeg {

enum class FlagSide { f1, f2 };

// An incident pair (p, l) of D(n,K) stored in n + 1 entries:
//   F1: (p_1, ..., p_n, l_1)    F2: (l_1, ..., l_n, p_1)
// The missing vertex is recovered with one forward pass.
struct Flag {
  FlagSide side = FlagSide::f1;
  std::vector<RingElem> data;

  friend bool operator==(const Flag&, const Flag&) = default;
};

struct ZPair {
  RingElem alpha;
  RingElem beta;

  friend bool operator==(const ZPair&, const ZPair&) = default;
};

// Z(a1,b1) Z(a2,b2) ... applied left to right.
using ZWalk = std::vector<ZPair>;

// The double directed flag graph DD(n,K). From F1 a step of colour c keeps
// the line and moves the point to p_1 + c (landing in F2); from F2 it keeps
// the point and moves the line to l_1 + c (landing in F1). Colour 0 keeps
// the pair. In restricted mode nonzero colours must be regular.
class FlagGraph {
 public:
  FlagGraph(Ring ring, std::size_t n, bool restricted = true);

  const Ring& ring() const noexcept { return base_.ring(); }
  const GraphD& base() const noexcept { return base_; }
  std::size_t n() const noexcept { return base_.n(); }
  std::size_t dim() const noexcept { return base_.n() + 1; }
  bool restricted() const noexcept { return restricted_; }

  Flag make_flag(FlagSide side, const Vertex& p, const Vertex& l) const;
  Vertex point_of(const Flag& f) const;
  Vertex line_of(const Flag& f) const;
  Flag random_f1(Rng& rng) const;

  // Throws Error{not_regular_colour} in restricted mode.
  Flag flag_step(const Flag& f, RingElem colour) const;
  // Two steps from F1: move the point by alpha, then the line by beta.
  Flag apply_Z(const Flag& f, RingElem alpha, RingElem beta) const;
  Flag walk_apply(const Flag& f, std::span<const ZPair> walk) const;

  // The walk applied to the symbolic F1 flag (x1, ..., x_{n+1}); a map of
  // K^{n+1}. Throws Error{insufficient_regular_elements} or
  // Error{not_regular_colour}.
  PolyMap zwalk_symbolic(std::span<const ZPair> walk) const;
  // Symbolic image of F1 after single flag steps; the result is in the F2
  // encoding when `colours` has odd length.
  PolyMap steps_symbolic(std::span<const RingElem> colours) const;

 private:
  void check_colour(RingElem c) const;
  void check_flag(const Flag& f) const;

  GraphD base_;
  bool restricted_;
};

// Inverse as a Z-walk: Z(a,b)^{-1} moves the line back first, so the pairs
// shift by one slot: (0,-b_s), (-a_s,-b_{s-1}), ..., (-a_1, 0).
ZWalk inverse_zwalk(std::span<const ZPair> walk, const Ring& ring);
// Reversed pairs with both colours negated, Z(-a_s,-b_s) ... Z(-a_1,-b_1).
ZWalk negated_reverse_zwalk(std::span<const ZPair> walk, const Ring& ring);
// Colours drawn uniformly from Reg(K).
ZWalk random_zwalk(const Ring& ring, std::size_t length, Rng& rng);
// w repeated k times.
ZWalk repeat_zwalk(std::span<const ZPair> walk, std::size_t k);

// "a1:b1,a2:b2"
std::string zwalk_to_string(std::span<const ZPair> walk);
ZWalk parse_zwalk(std::string_view text, const Ring& ring);
// "F1 v1,...,v{n+1}" / "F2 ..."
std::string to_string(const Flag& f);
Flag parse_flag(std::string_view text, const Ring& ring);

}  // namespace stabledeg
