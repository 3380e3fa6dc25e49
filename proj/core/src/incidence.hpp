#pragma once

// Forward passes through the incidence relations, shared by the numeric and
// symbolic code paths. `Ops` supplies add/sub/mul on the value type.

#include <span>
#include <vector>

#include "stabledeg/coords.hpp"
#include "stabledeg/poly.hpp"
#include "stabledeg/ring.hpp"

namespace stabledeg::detail {

struct NumericOps {
  const Ring& ring;
  RingElem add(RingElem a, RingElem b) const { return ring.add(a, b); }
  RingElem sub(RingElem a, RingElem b) const { return ring.sub(a, b); }
  RingElem mul(RingElem a, RingElem b) const { return ring.mul(a, b); }
};

struct SymbolicOps {
  Poly add(const Poly& a, const Poly& b) const { return a + b; }
  Poly sub(const Poly& a, const Poly& b) const { return a - b; }
  Poly mul(const Poly& a, const Poly& b) const { return a * b; }
};

// p_j = l_j - l[a_j] p[b_j], starting from p_0 = p1.
template <class V, class Ops>
std::vector<V> point_on(std::span<const Relation> rel, const std::vector<V>& l, V p1,
                        const Ops& ops) {
  std::vector<V> p;
  p.reserve(l.size());
  p.push_back(std::move(p1));
  for (std::size_t j = 1; j < l.size(); ++j) {
    p.push_back(ops.sub(l[j], ops.mul(l[rel[j].a], p[rel[j].b])));
  }
  return p;
}

// l_j = p_j + l[a_j] p[b_j], starting from l_0 = l1.
template <class V, class Ops>
std::vector<V> line_through(std::span<const Relation> rel, const std::vector<V>& p, V l1,
                            const Ops& ops) {
  std::vector<V> l;
  l.reserve(p.size());
  l.push_back(std::move(l1));
  for (std::size_t j = 1; j < p.size(); ++j) {
    l.push_back(ops.add(p[j], ops.mul(l[rel[j].a], p[rel[j].b])));
  }
  return l;
}

}  // namespace stabledeg::detail
