#include <gtest/gtest.h>

#include "generators.hpp"
#include "nodalvf/error.hpp"
#include "nodalvf/json_io.hpp"

using namespace nvf;
namespace io = nvf::json;

TEST(Json, CurveRoundTrip) {
  gen::Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    gen::WithX w = gen::random_c2(rng, 4);
    MarkedCurve back = io::curve_from(io::to_json(w.curve));
    EXPECT_EQ(gen::dump(back), gen::dump(w.curve));
    EXPECT_EQ(io::place_from_string(w.x.str()), w.x);
  }
}

TEST(Json, PathFamily) {
  auto j = nlohmann::json::parse(R"({"mode":"degeneration","params":["s","t"],
    "paths":[{"terms":[{"exp":[1,0],"coeff":"2/3"}]},{"terms":[{"exp":[0,-1],"coeff":3}]}]})");
  PathFamily f = io::family_from(j);
  EXPECT_EQ(f.mode, LimitMode::Degeneration);
  ASSERT_EQ(f.paths.size(), 2u);
  EXPECT_EQ(f.paths[0].leading_coefficient(), Rational(2, 3));
  EXPECT_EQ(io::path_from(io::to_json(f.paths[1])), f.paths[1]);
}

TEST(Json, Malformed) {
  EXPECT_THROW(io::rational_from(nlohmann::json::parse("[1]")), ParseError);
  EXPECT_THROW(io::curve_from(nlohmann::json::parse("{}")), ParseError);
  EXPECT_THROW(io::place_from_string("0-inf"), ParseError);
  EXPECT_EQ(io::point_from("inf"), ChartPoint::infinity());
}
