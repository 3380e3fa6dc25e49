#include "stabledeg/poly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "stabledeg/error.hpp"

namespace stabledeg {

namespace {

void check_compatible(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring()) || a.dim() != b.dim()) {
    throw Error(Errc::dimension_mismatch,
                "polynomials over " + a.ring().tag() + "/" + std::to_string(a.dim()) + " and " +
                    b.ring().tag() + "/" + std::to_string(b.dim()));
  }
}

bool term_before(const Poly::Term& a, const Poly::Term& b) { return a.mono > b.mono; }

}  // namespace

Poly Poly::constant(Ring ring, std::size_t dim, RingElem c) {
  Poly p(ring, dim);
  c = ring.from_unsigned(c.value);
  if (c.value != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(Ring ring, std::size_t dim, std::size_t var) {
  if (var >= dim) {
    throw Error(Errc::dimension_mismatch,
                "variable x" + std::to_string(var + 1) + " outside dimension " + std::to_string(dim));
  }
  Poly p(ring, dim);
  p.terms_.push_back({Monomial::variable(var), ring.one()});
  return p;
}

Poly Poly::from_terms(Ring ring, std::size_t dim, std::vector<Term> terms) {
  Poly p(ring, dim);
  for (auto& t : terms) {
    if (t.mono.span_dim() > dim) {
      throw Error(Errc::dimension_mismatch, "monomial uses a variable outside dimension " +
                                                std::to_string(dim));
    }
    t.coef = ring.from_unsigned(t.coef.value);
  }
  std::sort(terms.begin(), terms.end(), term_before);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = ring.add(p.terms_.back().coef, t.coef);
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coef.value == 0; });
  return p;
}

RingElem Poly::constant_term() const noexcept {
  if (!terms_.empty() && terms_.back().mono.is_constant()) return terms_.back().coef;
  return RingElem{0};
}

RingElem Poly::coefficient(const Monomial& m) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return RingElem{0};
}

RingElem Poly::eval(std::span<const RingElem> x) const {
  if (x.size() != dim_) {
    throw Error(Errc::dimension_mismatch, "evaluation point has " + std::to_string(x.size()) +
                                              " entries, polynomial has " + std::to_string(dim_) +
                                              " variables");
  }
  std::uint64_t acc = 0;
  for (const Term& t : terms_) {
    RingElem v = t.coef;
    for (std::size_t i = 0; i < t.mono.factor_count(); ++i) {
      const RingElem xi = x[t.mono.var(i)];
      const unsigned e = t.mono.exp(i);
      v = ring_.mul(v, e == 1 ? xi : ring_.pow(xi, e));
    }
    acc += v.value;
    if (acc >= ring_.modulus()) acc -= ring_.modulus();
  }
  return RingElem{acc};
}

Poly Poly::scaled(RingElem c) const {
  Poly r(ring_, dim_);
  if (c.value == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) {
    RingElem v = ring_.mul(t.coef, c);
    if (v.value != 0) r.terms_.push_back({t.mono, v});
  }
  return r;
}

Poly Poly::operator-() const {
  Poly r(ring_, dim_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, ring_.neg(t.coef)});
  return r;
}

namespace {

template <class Combine>
Poly merge(const Poly& a, const Poly& b, Combine combine_b) {
  check_compatible(a, b);
  const Ring& ring = a.ring();
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  auto ta = a.terms(), tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    auto cmp = ta[i].mono <=> tb[j].mono;
    if (cmp > 0) {
      out.push_back(ta[i++]);
    } else if (cmp < 0) {
      out.push_back({tb[j].mono, combine_b(ring.zero(), tb[j].coef)});
      ++j;
    } else {
      RingElem c = combine_b(ta[i].coef, tb[j].coef);
      if (c.value != 0) out.push_back({ta[i].mono, c});
      ++i;
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back({tb[j].mono, combine_b(ring.zero(), tb[j].coef)});
  return Poly::from_terms(ring, a.dim(), std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  const Ring& ring = a.ring();
  return merge(a, b, [&](RingElem x, RingElem y) { return ring.add(x, y); });
}

Poly operator-(const Poly& a, const Poly& b) {
  const Ring& ring = a.ring();
  return merge(a, b, [&](RingElem x, RingElem y) { return ring.sub(x, y); });
}

Poly operator*(const Poly& a, const Poly& b) {
  check_compatible(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ring(), a.dim());
  const Ring& ring = a.ring();
  if (a.size() * b.size() <= 256) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() * b.size());
    for (const auto& ta : a.terms()) {
      for (const auto& tb : b.terms()) out.push_back({ta.mono * tb.mono, ring.mul(ta.coef, tb.coef)});
    }
    return Poly::from_terms(ring, a.dim(), std::move(out));
  }
  PolyAccumulator acc(a.ring(), a.dim(), a.size() * b.size());
  acc.add_product(a, b, a.ring().one());
  return acc.take();
}

Poly Poly::add_constant(RingElem c) const { return *this + constant(ring_, dim_, c); }

bool Poly::is_canonical() const noexcept {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coef.value == 0 || terms_[i].coef.value >= ring_.modulus()) return false;
    if (i > 0 && !(terms_[i - 1].mono > terms_[i].mono)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

struct PolyAccumulator::Table {
  std::unordered_map<Monomial, std::uint64_t, MonomialHash> map;
};

PolyAccumulator::PolyAccumulator(Ring ring, std::size_t dim, std::size_t expected)
    : ring_(ring), dim_(dim), table_(std::make_unique<Table>()) {
  if (expected > 0) table_->map.reserve(std::min<std::size_t>(expected, 1u << 22));
}

PolyAccumulator::~PolyAccumulator() = default;
PolyAccumulator::PolyAccumulator(PolyAccumulator&&) noexcept = default;
PolyAccumulator& PolyAccumulator::operator=(PolyAccumulator&&) noexcept = default;

void PolyAccumulator::add(const Monomial& m, RingElem c) {
  if (c.value == 0) return;
  auto [it, inserted] = table_->map.try_emplace(m, c.value);
  if (!inserted) it->second = ring_.add(RingElem{it->second}, c).value;
}

void PolyAccumulator::add_scaled(const Poly& p, RingElem c) {
  if (c.value == 0) return;
  for (const auto& t : p.terms()) add(t.mono, ring_.mul(t.coef, c));
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b, RingElem c) {
  if (c.value == 0) return;
  for (const auto& ta : a.terms()) {
    const RingElem ca = ring_.mul(ta.coef, c);
    if (ca.value == 0) continue;
    for (const auto& tb : b.terms()) add(ta.mono * tb.mono, ring_.mul(ca, tb.coef));
  }
}

Poly PolyAccumulator::take() {
  Poly p(ring_, dim_);
  p.terms_.reserve(table_->map.size());
  for (auto& [m, c] : table_->map) {
    if (c != 0) p.terms_.push_back({m, RingElem{c}});
  }
  table_->map.clear();
  std::sort(p.terms_.begin(), p.terms_.end(), term_before);
  return p;
}

}  // namespace stabledeg
