#include <gtest/gtest.h>

#include "helpers.hpp"
#include "stabledeg/affine.hpp"
#include "stabledeg/error.hpp"
#include "stabledeg/flag_dd.hpp"
#include "stabledeg/poly_map.hpp"

using namespace stabledeg;
using testsupport::elems;
using testsupport::F;
using testsupport::random_map;
using testsupport::random_vector;
using testsupport::Z;

namespace {

Poly var(const Ring& r, std::size_t d, std::size_t i) { return Poly::variable(r, d, i); }
Poly cst(const Ring& r, std::size_t d, std::int64_t c) { return Poly::constant(r, d, r.elem(c)); }

// Composition by plain term-by-term substitution with Poly arithmetic.
PolyMap naive_compose(const PolyMap& outer, const PolyMap& inner) {
  const Ring& r = outer.ring();
  const std::size_t d = inner.dim();
  std::vector<Poly> coords;
  for (const Poly& f : outer.coords()) {
    Poly acc(r, d);
    for (const auto& t : f.terms()) {
      Poly prod = Poly::constant(r, d, t.coef);
      for (std::size_t k = 0; k < t.mono.factor_count(); ++k) {
        for (unsigned e = 0; e < t.mono.exp(k); ++e) prod = prod * inner.coord(t.mono.var(k));
      }
      acc += prod;
    }
    coords.push_back(acc);
  }
  return PolyMap(r, std::move(coords));
}

}  // namespace

TEST(Monomial, GradedLexOrder) {
  const std::vector<unsigned> a{2, 0, 0}, b{1, 1, 0}, c{0, 0, 3}, d{1, 0, 0};
  const Monomial ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b),
                 mc = Monomial::from_exponents(c), md = Monomial::from_exponents(d);
  EXPECT_GT(mc, ma);  // higher degree first
  EXPECT_GT(ma, mb);  // x1 most significant
  EXPECT_GT(mb, md);
  EXPECT_GT(md, Monomial());
  EXPECT_EQ(ma * md, Monomial::from_exponents(std::vector<unsigned>{3, 0, 0}));
}

TEST(Monomial, ExponentCap) {
  const Monomial big = Monomial::variable(0, kMaxExponent);
  EXPECT_THROW((void)(big * Monomial::variable(0)), Error);
  EXPECT_NO_THROW((void)(big * Monomial::variable(1)));
}

TEST(Poly, Examples) {
  const Ring z5 = Z(5);
  const Poly x = var(z5, 1, 0);
  const Poly p = (x + cst(z5, 1, 1)) * (x - cst(z5, 1, 1));
  EXPECT_EQ(p, var(z5, 1, 0) * var(z5, 1, 0) + cst(z5, 1, 4));
  EXPECT_EQ(p.coefficient(Monomial()), z5.elem(4));

  const Ring z256 = Z(256);
  const Poly y = var(z256, 1, 0).scaled(z256.elem(128));
  EXPECT_TRUE((y + y).is_zero());
  EXPECT_EQ(p + Poly(z5, 1), p);
}

TEST(Poly, CanonicalFormIdempotent) {
  Rng rng(1);
  const Ring r = Z(256);
  for (int i = 0; i < 200; ++i) {
    const PolyMap f = random_map(r, 4, 12, 3, rng);
    for (const Poly& p : f.coords()) {
      EXPECT_TRUE(p.is_canonical());
      std::vector<Poly::Term> t(p.terms().begin(), p.terms().end());
      EXPECT_EQ(Poly::from_terms(r, 4, t), p);
      EXPECT_TRUE((p * p).is_canonical());
    }
  }
}

TEST(Poly, RingLawsRandom) {
  Rng rng(2);
  const Ring r = F(127);
  for (int i = 0; i < 100; ++i) {
    const PolyMap f = random_map(r, 3, 6, 2, rng);
    const Poly &a = f.coord(0), &b = f.coord(1), &c = f.coord(2);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
    const auto v = random_vector(r, 3, rng);
    EXPECT_EQ((a * b).eval(v), r.mul(a.eval(v), b.eval(v)));
  }
}

TEST(Poly, LargeProductsMatchSmallPath) {
  Rng rng(3);
  const Ring r = Z(65536);
  const PolyMap f = random_map(r, 6, 40, 3, rng);
  const Poly prod = f.coord(0) * f.coord(1);  // > 256 term pairs: accumulator path
  const auto v = random_vector(r, 6, rng);
  EXPECT_EQ(prod.eval(v), r.mul(f.coord(0).eval(v), f.coord(1).eval(v)));
  EXPECT_TRUE(prod.is_canonical());
}

TEST(PolyMap, EvalExamples) {
  const Ring z5 = Z(5);
  EXPECT_EQ(PolyMap::identity(z5, 2).eval(elems(z5, {3, 7})), elems(z5, {3, 7}));
  const PolyMap f(z5, {var(z5, 2, 0) * var(z5, 2, 1) + cst(z5, 2, 1), var(z5, 2, 1)});
  EXPECT_EQ(f.eval(elems(z5, {2, 3})), elems(z5, {2, 3}));
  const PolyMap g(z5, {var(z5, 2, 0) + cst(z5, 2, 3), var(z5, 2, 1) * var(z5, 2, 1) + cst(z5, 2, 4)});
  EXPECT_EQ(g.eval(elems(z5, {0, 0})), elems(z5, {3, 4}));
  EXPECT_THROW((void)f.eval(elems(z5, {1})), Error);
}

TEST(PolyMap, ComposeExamples) {
  const Ring z7 = Z(7);
  const PolyMap f(z7, {var(z7, 2, 0) + var(z7, 2, 1) * var(z7, 2, 1), var(z7, 2, 1)});
  EXPECT_EQ(compose(f, PolyMap::identity(z7, 2)), f);
  EXPECT_EQ(compose(PolyMap::identity(z7, 2), f), f);
  const PolyMap expect(z7, {var(z7, 2, 0) + (var(z7, 2, 1) * var(z7, 2, 1)).scaled(z7.elem(2)),
                            var(z7, 2, 1)});
  EXPECT_EQ(compose(f, f), expect);
}

TEST(PolyMap, ComposeOfFlagMapsStaysCubic) {
  Rng rng(4);
  const Ring r = Z(256);
  const FlagGraph dd(r, 7);
  for (int i = 0; i < 10; ++i) {
    const PolyMap a = dd.zwalk_symbolic(random_zwalk(r, 3, rng));
    const PolyMap b = dd.zwalk_symbolic(random_zwalk(r, 2, rng));
    EXPECT_LE(compose(a, b).degree(), 3u);
  }
}

TEST(PolyMap, ComposeMatchesNaiveSubstitution) {
  Rng rng(5);
  for (const Ring& r : {Z(256), F(127), Z(6)}) {
    for (int i = 0; i < 40; ++i) {
      const std::size_t d = 2 + rng.below(4);
      const PolyMap f = random_map(r, d, 8, 3, rng);
      const PolyMap g = random_map(r, d, 8, 2, rng);
      EXPECT_EQ(compose(f, g), naive_compose(f, g));
    }
  }
}

TEST(PolyMap, Associativity) {
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    const Ring r = i % 2 ? Z(256) : F(127);
    const std::size_t d = 1 + rng.below(4);
    const PolyMap f = random_map(r, d, 5, 2, rng), g = random_map(r, d, 5, 2, rng),
                  h = random_map(r, d, 5, 2, rng);
    EXPECT_EQ(compose(f, compose(g, h)), compose(compose(f, g), h));
  }
}

TEST(PolyMap, EvalComposeCompatibility) {
  Rng rng(7);
  const Ring r = Z(65536);
  for (int i = 0; i < 50; ++i) {
    const PolyMap f = random_map(r, 4, 6, 3, rng), g = random_map(r, 4, 6, 3, rng);
    const PolyMap fg = compose(f, g);
    for (int j = 0; j < 5; ++j) {
      const auto v = random_vector(r, 4, rng);
      EXPECT_EQ(fg.eval(v), f.eval(g.eval(v)));
    }
  }
}

TEST(PolyMap, PowerLaws) {
  Rng rng(8);
  const Ring r = F(127);
  const FlagGraph dd(r, 5);
  const PolyMap b = dd.zwalk_symbolic(random_zwalk(r, 2, rng));
  EXPECT_TRUE(power(PolyMap::identity(r, 4), 10).is_identity());
  EXPECT_EQ(power(b, 1), b);
  EXPECT_EQ(power(b, 6), compose(power(b, 2), power(b, 4)));
  for (std::uint64_t a = 1; a <= 4; ++a) {
    for (std::uint64_t c = 1; c <= 4; ++c) {
      EXPECT_EQ(power(b, a + c), compose(power(b, a), power(b, c)));
    }
  }
  EXPECT_THROW((void)power(b, 0), Error);
  std::size_t steps = 0;
  (void)power(b, 13, [&](const PolyMap&) { ++steps; });
  EXPECT_GT(steps, 0u);
}

TEST(PolyMap, DegreeAndEquality) {
  const Ring r = F(5);
  EXPECT_EQ(PolyMap::identity(r, 3).degree(), 1u);
  EXPECT_EQ(PolyMap(r, {Poly(r, 2), Poly(r, 2)}).degree(), 0u);
  Poly x5 = var(r, 1, 0);
  for (int i = 0; i < 4; ++i) x5 = x5 * var(r, 1, 0);
  const PolyMap a(r, {x5}), b = PolyMap::identity(r, 1);
  EXPECT_FALSE(a == b);  // formal, although x^5 = x on F_5
  EXPECT_EQ(a.eval(elems(r, {3})), b.eval(elems(r, {3})));
  EXPECT_TRUE(a == a);
}

TEST(PolyMap, DimensionChecks) {
  const Ring r = Z(8);
  EXPECT_THROW(PolyMap(r, {Poly(r, 2)}), Error);
  EXPECT_THROW((void)compose(PolyMap::identity(r, 2), PolyMap::identity(r, 3)), Error);
}

TEST(Affine, Examples) {
  const Ring r = Z(256);
  EXPECT_TRUE(AffineMap::identity(r, 4).to_map().is_identity());

  Rng rng(9);
  const AffineMap a = AffineMap::random_first_row(r, 5, rng);
  const AffineMap inv = a.inverse();
  EXPECT_EQ(inv.at(0, 0), r.one());
  for (std::size_t j = 1; j < 5; ++j) {
    EXPECT_NE(a.at(0, j), r.zero());
    EXPECT_EQ(inv.at(0, j), r.neg(a.at(0, j)));
  }
  EXPECT_TRUE(compose(inv.to_map(), a.to_map()).is_identity());

  const Ring z4 = Z(4);
  EXPECT_THROW(AffineMap(z4, 2, elems(z4, {1, 1, 1, 3}), elems(z4, {0, 0})), Error);
  try {
    AffineMap(z4, 2, elems(z4, {1, 1, 1, 3}), elems(z4, {0, 0}));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::singular_matrix);
  }
}

TEST(Affine, FirstRowShapeChecked) {
  const Ring r = Z(256);
  EXPECT_THROW(AffineMap(r, 2, elems(r, {1, 0, 3, 1}), elems(r, {0, 0}), AffineForm::first_row),
               Error);
  EXPECT_NO_THROW(AffineMap(r, 2, elems(r, {1, 3, 0, 1}), elems(r, {0, 0}), AffineForm::first_row));
}

TEST(Affine, InverseAndApplyAllForms) {
  Rng rng(10);
  for (const Ring& r : {Z(256), Z(360), F(127), Z(std::uint64_t{1} << 32)}) {
    for (int i = 0; i < 20; ++i) {
      const std::size_t d = 2 + rng.below(6);
      for (const AffineMap& a : {AffineMap::random_first_row(r, d, rng),
                                 AffineMap::random_monomial(r, d, rng),
                                 AffineMap::random_dense(r, d, rng)}) {
        const AffineMap inv = a.inverse();
        const auto v = random_vector(r, d, rng);
        EXPECT_EQ(inv.apply(a.apply(v)), v);
        EXPECT_EQ(a.to_map().eval(v), a.apply(v));
        EXPECT_TRUE(compose(a.to_map(), inv.to_map()).is_identity());
        EXPECT_LE(compose(a.to_map(), a.to_map()).degree(), 1u);
      }
    }
  }
}

TEST(Affine, FirstRowCostIsLinear) {
  Rng rng(11);
  const Ring r = Z(256);
  for (std::size_t d : {10u, 40u, 100u}) {
    const AffineMap a = AffineMap::random_first_row(r, d, rng);
    EXPECT_EQ(a.nonzero_count(), 2 * d - 1);
  }
}

TEST(Affine, InvertMatrixRejectsZeroDivisorDeterminant) {
  const Ring r = Z(12);
  EXPECT_FALSE(invert_matrix(r, 2, elems(r, {2, 0, 0, 1})).has_value());
  const auto inv = invert_matrix(r, 2, elems(r, {5, 1, 0, 7}));
  ASSERT_TRUE(inv.has_value());
}

TEST(Density, Examples) {
  const Ring r = Z(256);
  const DensityStats id = monomial_density(PolyMap::identity(r, 6));
  EXPECT_EQ(id.cubic_squarefree, 0u);
  EXPECT_DOUBLE_EQ(id.ratio, 0.0);

  const std::size_t d = 5;
  std::vector<Poly::Term> t;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        std::vector<unsigned> e(d, 0);
        e[i] = e[j] = e[k] = 1;
        t.push_back({Monomial::from_exponents(e), r.one()});
      }
    }
  }
  const Poly dense = Poly::from_terms(r, d, t);
  const DensityStats full = monomial_density(PolyMap(r, std::vector<Poly>(d, dense)));
  EXPECT_EQ(full.binom_d3, 10u);
  EXPECT_DOUBLE_EQ(full.ratio, 1.0);
  EXPECT_DOUBLE_EQ(full.max_ratio, 1.0);
}
