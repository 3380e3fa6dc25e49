#include "stabledeg/flag_dd.hpp"

#include "incidence.hpp"
#include "stabledeg/error.hpp"

namespace stabledeg {

FlagGraph::FlagGraph(Ring ring, std::size_t n, bool restricted)
    : base_(ring, n), restricted_(restricted) {}

void FlagGraph::check_colour(RingElem c) const {
  if (restricted_ && c.value != 0 && !ring().is_regular(c)) {
    throw Error(Errc::not_regular_colour,
                std::to_string(c.value) + " is not a regular element of " + ring().tag());
  }
}

void FlagGraph::check_flag(const Flag& f) const {
  if (f.data.size() != dim()) {
    throw Error(Errc::dimension_mismatch, "flag of length " + std::to_string(f.data.size()) +
                                              " in DD(" + std::to_string(n()) + ", " +
                                              ring().tag() + ")");
  }
}

Flag FlagGraph::make_flag(FlagSide side, const Vertex& p, const Vertex& l) const {
  if (!base_.incident(p, l)) throw Error(Errc::invalid_argument, "point and line are not incident");
  const Vertex& own = side == FlagSide::f1 ? p : l;
  const Vertex& other = side == FlagSide::f1 ? l : p;
  Flag f{side, own.coords};
  f.data.push_back(other.coords[0]);
  return f;
}

Vertex FlagGraph::point_of(const Flag& f) const {
  check_flag(f);
  if (f.side == FlagSide::f1) return {Side::point, {f.data.begin(), f.data.end() - 1}};
  return base_.point_on(line_of(f), f.data.back());
}

Vertex FlagGraph::line_of(const Flag& f) const {
  check_flag(f);
  if (f.side == FlagSide::f2) return {Side::line, {f.data.begin(), f.data.end() - 1}};
  return base_.line_through(point_of(f), f.data.back());
}

Flag FlagGraph::random_f1(Rng& rng) const {
  Flag f{FlagSide::f1, std::vector<RingElem>(dim())};
  for (auto& x : f.data) x = ring().sample(rng);
  return f;
}

Flag FlagGraph::flag_step(const Flag& f, RingElem colour) const {
  check_flag(f);
  check_colour(colour);
  const Ring& r = ring();
  if (f.side == FlagSide::f1) {
    const Vertex p = point_of(f);
    Flag out{FlagSide::f2, base_.line_through(p, f.data.back()).coords};
    out.data.push_back(r.add(p.coords[0], colour));
    return out;
  }
  const Vertex l = line_of(f);
  Flag out{FlagSide::f1, base_.point_on(l, f.data.back()).coords};
  out.data.push_back(r.add(l.coords[0], colour));
  return out;
}

Flag FlagGraph::apply_Z(const Flag& f, RingElem alpha, RingElem beta) const {
  if (f.side != FlagSide::f1) throw Error(Errc::invalid_argument, "Z acts on F1 flags");
  return flag_step(flag_step(f, alpha), beta);
}

Flag FlagGraph::walk_apply(const Flag& f, std::span<const ZPair> walk) const {
  Flag cur = f;
  for (const ZPair& z : walk) cur = apply_Z(cur, z.alpha, z.beta);
  return cur;
}

PolyMap FlagGraph::steps_symbolic(std::span<const RingElem> colours) const {
  const Ring& r = ring();
  if (!r.has_enough_regular()) {
    throw Error(Errc::insufficient_regular_elements,
                "ring " + r.tag() + " has fewer than 3 regular elements");
  }
  for (RingElem c : colours) check_colour(c);
  const std::span<const Relation> rel = base_.relations();
  const detail::SymbolicOps ops;
  const std::size_t n = base_.n();

  const PolyMap id = PolyMap::identity(r, dim());
  std::vector<Poly> own(id.coords().begin(), id.coords().end() - 1);
  Poly other = id.coords().back();
  bool at_f1 = true;
  for (RingElem c : colours) {
    // F1: own = point, other = l_1.  F2: own = line, other = p_1.
    Poly moved = own[0].add_constant(c);
    own = at_f1 ? detail::line_through<Poly>(rel, own, std::move(other), ops)
                : detail::point_on<Poly>(rel, own, std::move(other), ops);
    other = std::move(moved);
    at_f1 = !at_f1;
  }
  own.reserve(n + 1);
  own.push_back(std::move(other));
  return PolyMap(r, std::move(own));
}

PolyMap FlagGraph::zwalk_symbolic(std::span<const ZPair> walk) const {
  std::vector<RingElem> colours;
  colours.reserve(2 * walk.size());
  for (const ZPair& z : walk) {
    colours.push_back(z.alpha);
    colours.push_back(z.beta);
  }
  return steps_symbolic(colours);
}

ZWalk inverse_zwalk(std::span<const ZPair> walk, const Ring& ring) {
  ZWalk inv;
  if (walk.empty()) return inv;
  inv.reserve(walk.size() + 1);
  RingElem pending = ring.zero();
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
    inv.push_back({pending, ring.neg(it->beta)});
    pending = ring.neg(it->alpha);
  }
  inv.push_back({pending, ring.zero()});
  return inv;
}

ZWalk negated_reverse_zwalk(std::span<const ZPair> walk, const Ring& ring) {
  ZWalk out;
  out.reserve(walk.size());
  for (auto it = walk.rbegin(); it != walk.rend(); ++it) {
    out.push_back({ring.neg(it->alpha), ring.neg(it->beta)});
  }
  return out;
}

ZWalk random_zwalk(const Ring& ring, std::size_t length, Rng& rng) {
  ZWalk w(length);
  for (auto& z : w) {
    z.alpha = ring.sample_regular(rng);
    z.beta = ring.sample_regular(rng);
  }
  return w;
}

ZWalk repeat_zwalk(std::span<const ZPair> walk, std::size_t k) {
  ZWalk out;
  out.reserve(walk.size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), walk.begin(), walk.end());
  return out;
}

std::string zwalk_to_string(std::span<const ZPair> walk) {
  std::string out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(walk[i].alpha.value) + ':' + std::to_string(walk[i].beta.value);
  }
  return out;
}

ZWalk parse_zwalk(std::string_view text, const Ring& ring) {
  // Reuse the residue parser by turning "a:b,c:d" into "a,b,c,d".
  std::string flat(text);
  std::size_t colons = 0, commas = 0;
  for (char& ch : flat) {
    if (ch == ':') {
      ch = ',';
      ++colons;
    } else if (ch == ',') {
      ++commas;
    }
  }
  const auto values = parse_residues(flat, ring);
  if (values.size() % 2 != 0 || colons != values.size() / 2 || (colons > 0 && commas + 1 != colons)) {
    throw Error(Errc::parse_error, "a Z-walk is written 'a1:b1,a2:b2,...'");
  }
  ZWalk w;
  for (std::size_t i = 0; i < values.size(); i += 2) w.push_back({values[i], values[i + 1]});
  return w;
}

std::string to_string(const Flag& f) {
  return std::string(f.side == FlagSide::f1 ? "F1 " : "F2 ") + join_residues(f.data);
}

Flag parse_flag(std::string_view text, const Ring& ring) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.size() < 3 || text[0] != 'F' || (text[1] != '1' && text[1] != '2') || text[2] != ' ') {
    throw Error(Errc::parse_error, "a flag is written 'F1 v1,...' or 'F2 v1,...'");
  }
  return {text[1] == '1' ? FlagSide::f1 : FlagSide::f2, parse_residues(text.substr(3), ring)};
}

}  // namespace stabledeg
