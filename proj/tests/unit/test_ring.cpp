#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "stabledeg/error.hpp"
#include "stabledeg/ring.hpp"

using namespace stabledeg;
using testsupport::F;
using testsupport::Z;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_argument;
}

}  // namespace

TEST(Ring, MakeExamples) {
  const Ring z = Z(256);
  EXPECT_EQ(z.modulus(), 256u);
  EXPECT_EQ(z.kind(), RingKind::residue_ring);
  EXPECT_FALSE(z.is_field());
  EXPECT_TRUE(F(127).is_field());
  EXPECT_EQ(code_of([] { (void)F(256); }), Errc::non_prime_modulus);
  EXPECT_EQ(code_of([] { (void)Z(1); }), Errc::modulus_too_small);
  EXPECT_EQ(code_of([] { (void)Z((std::uint64_t{1} << 32) + 1); }), Errc::modulus_too_large);
  EXPECT_NO_THROW((void)Z(std::uint64_t{1} << 32));
}

TEST(Ring, ArithmeticExamples) {
  const Ring z5 = Z(5), z256 = Z(256);
  EXPECT_EQ(z5.mul(z5.elem(2), z5.elem(3)), z5.elem(1));
  EXPECT_EQ(z256.add(z256.elem(200), z256.elem(100)), z256.elem(44));
  for (const Ring& r : {z5, z256, F(127), Z(std::uint64_t{1} << 32)}) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
      const RingElem a = r.sample(rng);
      EXPECT_EQ(r.add(a, r.neg(a)), r.zero());
    }
  }
}

TEST(Ring, LargestModulusProductsDoNotOverflow) {
  const Ring r = Z(std::uint64_t{1} << 32);
  const RingElem m1 = r.elem(-1);
  EXPECT_EQ(m1.value, (std::uint64_t{1} << 32) - 1);
  EXPECT_EQ(r.mul(m1, m1), r.one());
  const Ring p = F(4294967291u);  // largest prime below 2^32
  const RingElem q = p.elem(-1);
  EXPECT_EQ(p.mul(q, q), p.one());
}

TEST(Ring, RegularExamples) {
  EXPECT_TRUE(Z(256).is_regular(Z(256).elem(3)));
  EXPECT_FALSE(Z(256).is_regular(Z(256).elem(6)));
  EXPECT_TRUE(F(127).is_regular(F(127).elem(126)));
  EXPECT_FALSE(F(127).is_regular(F(127).zero()));
}

TEST(Ring, EnoughRegularExamples) {
  EXPECT_FALSE(Z(2).has_enough_regular());
  EXPECT_TRUE(Z(8).has_enough_regular());
  EXPECT_FALSE(F(3).has_enough_regular());
  EXPECT_TRUE(Z(4).regular_count() == 2);
}

TEST(Ring, SampleRegular) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    EXPECT_NE(F(127).sample_regular(rng).value, 0u);
    EXPECT_EQ(Z(256).sample_regular(rng).value % 2, 1u);
  }
  EXPECT_EQ(code_of([&] { (void)Z(2).sample_regular(rng); }), Errc::insufficient_regular_elements);
}

TEST(Ring, RegularIffMultiplicationInjective) {
  for (std::uint64_t m : {2u, 6u, 12u, 64u, 97u, 360u, 4096u}) {
    const Ring r = Z(m);
    std::uint64_t regular = 0;
    for (std::uint64_t a = 0; a < m; ++a) {
      std::vector<bool> seen(m, false);
      bool injective = true;
      for (std::uint64_t x = 0; x < m && injective; ++x) {
        const auto y = r.mul(r.from_unsigned(a), r.from_unsigned(x)).value;
        if (seen[y]) injective = false;
        seen[y] = true;
      }
      EXPECT_EQ(r.is_regular(r.from_unsigned(a)), injective) << m << " " << a;
      regular += injective;
    }
    EXPECT_EQ(r.regular_count(), regular);
  }
}

TEST(Ring, AxiomsExhaustiveSmall) {
  for (const Ring& r : {Z(6), F(5)}) {
    const std::uint64_t m = r.modulus();
    for (std::uint64_t x = 0; x < m; ++x) {
      for (std::uint64_t y = 0; y < m; ++y) {
        for (std::uint64_t z = 0; z < m; ++z) {
          const RingElem a{x}, b{y}, c{z};
          EXPECT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
          EXPECT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
          EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        }
        EXPECT_EQ(r.add(RingElem{x}, RingElem{y}), r.add(RingElem{y}, RingElem{x}));
        EXPECT_EQ(r.mul(RingElem{x}, RingElem{y}), r.mul(RingElem{y}, RingElem{x}));
        EXPECT_EQ(r.sub(RingElem{x}, RingElem{y}), r.add(RingElem{x}, r.neg(RingElem{y})));
      }
      EXPECT_EQ(r.mul(RingElem{x}, r.one()), RingElem{x});
    }
  }
}

TEST(Ring, AxiomsRandomTriplesAndCanonicality) {
  Rng rng(5);
  for (const Ring& r : {Z(256), Z(65536), Z(std::uint64_t{1} << 32), F(127), Z(1000003)}) {
    for (int i = 0; i < 2000; ++i) {
      const RingElem a = r.sample(rng), b = r.sample(rng), c = r.sample(rng);
      EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
      EXPECT_EQ(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
      for (RingElem v : {r.add(a, b), r.sub(a, b), r.mul(a, b), r.neg(a)}) {
        EXPECT_LT(v.value, r.modulus());
      }
    }
  }
}

TEST(Ring, InverseOfRegularElements) {
  for (const Ring& r : {Z(256), Z(360), F(127)}) {
    for (std::uint64_t a = 0; a < r.modulus(); ++a) {
      const auto inv = r.inverse(RingElem{a});
      EXPECT_EQ(inv.has_value(), r.is_regular(RingElem{a}));
      if (inv) {
        EXPECT_EQ(r.mul(RingElem{a}, *inv), r.one());
      }
    }
  }
}

TEST(Ring, TagRoundTrip) {
  for (const Ring& r : {Z(256), F(127), Z(std::uint64_t{1} << 32)}) {
    EXPECT_EQ(Ring::parse(r.tag()), r);
  }
  EXPECT_EQ(Ring::parse("Z:65536"), Z(65536));
  EXPECT_EQ(Ring::parse("F 5"), F(5));
  EXPECT_EQ(code_of([] { (void)Ring::parse("Q 5"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { (void)Ring::parse("Z 12x"); }), Errc::parse_error);
  EXPECT_EQ(code_of([] { (void)Ring::parse("F 9"); }), Errc::non_prime_modulus);
}

TEST(Ring, SeededSamplingIsDeterministic) {
  Rng a(42), b(42);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(Z(65536).sample(a), Z(65536).sample(b));
  Rng c(7);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 1000; ++i) seen.insert(c.below(10));
  EXPECT_EQ(seen.size(), 10u);
}
