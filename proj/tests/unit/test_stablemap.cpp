#include <gtest/gtest.h>

#include "helpers.hpp"
#include "stabledeg/error.hpp"
#include "stabledeg/flag_dd.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/stablemap.hpp"

using namespace stabledeg;
using testsupport::F;
using testsupport::random_map;
using testsupport::Z;

namespace {

std::string parse_error(std::string_view text) {
  try {
    (void)parse_stablemap(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::parse_error);
    return e.what();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return {};
}

}  // namespace

TEST(StableMap, Format) {
  const Ring r = Z(256);
  const Poly x1 = Poly::variable(r, 3, 0), x3 = Poly::variable(r, 3, 2);
  const Poly f = (x1 * x1 * x3).scaled(r.elem(3)) + Poly::variable(r, 3, 1) +
                 Poly::constant(r, 3, r.elem(5));
  const PolyMap m(r, {f, Poly(r, 3), x3});
  EXPECT_EQ(to_stablemap(m),
            "STABLEMAP v1\n"
            "ring Z 256\n"
            "dim 3\n"
            "coord 1: 3*x1^2*x3 + 1*x2 + 5\n"
            "coord 2: 0\n"
            "coord 3: 1*x3\n");
}

TEST(StableMap, RoundTripGeneratedMaps) {
  Rng rng(1);
  for (const Ring& r : {Z(256), Z(65536), F(127), Z(std::uint64_t{1} << 32)}) {
    for (int i = 0; i < 25; ++i) {
      const PolyMap f = random_map(r, 1 + rng.below(7), rng.below(10), 4, rng);
      const std::string text = to_stablemap(f);
      const PolyMap back = parse_stablemap(text);
      EXPECT_EQ(back, f);
      EXPECT_EQ(to_stablemap(back), text);
    }
    const PolyMap g = FlagGraph(r, 9).zwalk_symbolic(random_zwalk(r, 4, rng));
    EXPECT_EQ(parse_stablemap(to_stablemap(g)), g);
    const PolyMap d = GraphD(r, 9).walk_symbolic(random_walk(r, 6, rng));
    EXPECT_EQ(parse_stablemap(to_stablemap(d)), d);
  }
}

TEST(StableMap, ParseErrorsCarryLineNumbers) {
  const std::string good = "STABLEMAP v1\nring Z 8\ndim 2\ncoord 1: 1*x1\ncoord 2: 1*x2 + 3\n";
  EXPECT_NO_THROW((void)parse_stablemap(good));
  EXPECT_NE(parse_error("STABLEMAP v2\n").find("line 1:"), std::string::npos);
  EXPECT_NE(parse_error("STABLEMAP v1\nring Q 8\ndim 1\ncoord 1: 0\n").find("line 2:"),
            std::string::npos);
  EXPECT_NE(parse_error("STABLEMAP v1\nring Z 8\ndim 2\ncoord 1: 1*x1\ncoord 2: 9*x2\n")
                .find("line 5:"),
            std::string::npos);
  EXPECT_NE(parse_error("STABLEMAP v1\nring Z 8\ndim 2\ncoord 1: 1*x3\ncoord 2: 0\n").find("line 4:"),
            std::string::npos);
  EXPECT_NE(parse_error("STABLEMAP v1\nring Z 8\ndim 2\ncoord 1: 1*x1*x1\ncoord 2: 0\n")
                .find("line 4:"),
            std::string::npos);
  EXPECT_NE(parse_error("STABLEMAP v1\nring Z 8\ndim 2\ncoord 1: 1*x1\n").find("line"),
            std::string::npos);
  EXPECT_NE(parse_error(good + "coord 3: 1\n").find("line 6:"), std::string::npos);
  (void)parse_error("STABLEMAP v1\nring Z 8\ndim 1\ncoord 1: 1*x1^0\n");
  (void)parse_error("STABLEMAP v1\nring Z 8\ndim 1\ncoord 1: 1*y1\n");
  (void)parse_error("STABLEMAP v1\nring Z 8\ndim 1\ncoord 1: 1*x1 +\n");
}

TEST(StableMap, FirstLineOffset) {
  try {
    (void)parse_stablemap("STABLEMAP v1\nring Z 8\ndim x\n", 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 12:"), std::string::npos) << e.what();
  }
}
