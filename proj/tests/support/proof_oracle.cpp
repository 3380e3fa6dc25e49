#include "proof_oracle.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace testsupport {

using stabledeg::Poly;
using stabledeg::PolyMap;
using stabledeg::Ring;
using stabledeg::RingElem;

std::vector<Label> labels(std::size_t n) {
  std::vector<Label> out{{Label::first, 1}, {Label::diag, 1}, {Label::upper, 1}, {Label::lower, 1}};
  for (std::size_t i = 2; out.size() < n; ++i) {
    out.push_back({Label::diag, i});
    out.push_back({Label::diag_prime, i});
    out.push_back({Label::upper, i});
    out.push_back({Label::lower, i});
  }
  out.resize(n);
  return out;
}

namespace {

using Key = std::pair<int, std::size_t>;

Key key(Label::Kind k, std::size_t i) {
  // u'_11 is u_11.
  if (k == Label::diag_prime && i == 1) k = Label::diag;
  return {static_cast<int>(k), i};
}

// For coordinate j: the line factor and point factor of l_j - p_j = l_a p_b.
struct Factors {
  Key line, point;
};

Factors factors(const Label& lb) {
  const std::size_t i = lb.i;
  switch (lb.kind) {
    case Label::diag:
      // l_11 - p_11 = l_1 p_1;  l_ii - p_ii = l_1 p_{i-1,i}
      return i == 1 ? Factors{key(Label::first, 1), key(Label::first, 1)}
                    : Factors{key(Label::first, 1), key(Label::upper, i - 1)};
    case Label::diag_prime:
      // l'_ii - p'_ii = l_{i,i-1} p_1
      return {key(Label::lower, i - 1), key(Label::first, 1)};
    case Label::upper:
      // l_{i,i+1} - p_{i,i+1} = l_ii p_1
      return {key(Label::diag, i), key(Label::first, 1)};
    case Label::lower:
      // l_21 - p_21 = l_1 p_11;  l_{i+1,i} - p_{i+1,i} = l_1 p'_ii
      return {key(Label::first, 1), key(Label::diag_prime, i)};
    case Label::first:
      break;
  }
  throw std::logic_error("no relation for u_1");
}

}  // namespace

PolyMap recurrence_steps(const Ring& ring, std::size_t n, std::span<const RingElem> colours) {
  const std::size_t d = n + 1;
  const std::vector<Label> lab = labels(n);
  std::map<Key, std::size_t> index;
  for (std::size_t j = 0; j < n; ++j) index[key(lab[j].kind, lab[j].i)] = j;

  std::vector<Factors> fac(n, Factors{});
  for (std::size_t j = 1; j < n; ++j) fac[j] = factors(lab[j]);
  auto at = [&](const Key& k) { return index.at(k); };

  std::vector<Poly> p, l(n, Poly(ring, d));
  for (std::size_t j = 0; j < n; ++j) p.push_back(Poly::variable(ring, d, j));
  l[0] = Poly::variable(ring, d, n);
  // The initial line through the symbolic point, coordinate by coordinate.
  for (std::size_t j = 1; j < n; ++j) {
    l[j] = p[j] + l[at(fac[j].line)] * p[at(fac[j].point)];
  }

  bool at_f1 = true;
  for (RingElem c : colours) {
    if (at_f1) {
      std::vector<Poly> dp(n, Poly(ring, d));
      dp[0] = Poly::constant(ring, d, c);
      for (std::size_t j = 1; j < n; ++j) dp[j] = -(l[at(fac[j].line)] * dp[at(fac[j].point)]);
      for (std::size_t j = 0; j < n; ++j) p[j] += dp[j];
    } else {
      std::vector<Poly> dl(n, Poly(ring, d));
      dl[0] = Poly::constant(ring, d, c);
      for (std::size_t j = 1; j < n; ++j) dl[j] = dl[at(fac[j].line)] * p[at(fac[j].point)];
      for (std::size_t j = 0; j < n; ++j) l[j] += dl[j];
    }
    at_f1 = !at_f1;
  }

  std::vector<Poly> out;
  if (at_f1) {
    out = p;
    out.push_back(l[0]);
  } else {
    out = l;
    out.push_back(p[0]);
  }
  return PolyMap(ring, std::move(out));
}

}  // namespace testsupport
