#include <gtest/gtest.h>

#include "generators.hpp"
#include "nodalvf/error.hpp"

using namespace nvf;

namespace {

MarkedCurve line(FieldTriple f, ChartPoint pinf, std::vector<ChartPoint> marks) {
  MarkedCurve c;
  c.components = {{0, f}};
  c.p_infty = Place{0, pinf};
  for (const auto& m : marks) c.markings.push_back(Place{0, m});
  return c;
}

bool iso(const MarkedCurve& a, const Place& xa, const MarkedCurve& b, const Place& xb) {
  return curve_isomorphic(a, b, xa, xb).has_value();
}

}  // namespace

TEST(Bubble, KnudsenAtPInfty) {
  // (1 + 5x) d/dx with p_infty at its zero -1/5, where the weight is 5.
  MarkedCurve c = line(FieldTriple{1, 5, 0}, ChartPoint(Rational(-1, 5)), {ChartPoint(0), ChartPoint(1)});
  BubbleResult r = knudsen_stabilize(c, c.p_infty);
  EXPECT_FALSE(r.map.identity);
  EXPECT_EQ(r.curve.components.size(), 2u);
  const FieldTriple& e = r.curve.field(r.new_x.comp);
  EXPECT_EQ(e, (FieldTriple{0, 5, 0}));
  EXPECT_EQ(r.curve.p_infty, (Place{r.new_x.comp, ChartPoint(0)}));
  EXPECT_EQ(ncr(r.curve), ncr(c));
  EXPECT_TRUE(category_check(r.curve, CurveKind::C2, r.new_x).pass());
}

TEST(Bubble, KnudsenAtSmoothPointIsIdentity) {
  MarkedCurve c = line(FieldTriple{1, 0, 0}, ChartPoint::infinity(), {ChartPoint(0)});
  BubbleResult r = knudsen_stabilize(c, Place{0, ChartPoint(4)});
  EXPECT_TRUE(r.map.identity);
  EXPECT_EQ(gen::dump(r.curve), gen::dump(c));
}

TEST(Bubble, InflateAtZero) {
  MarkedCurve c = line(FieldTriple{0, 1, 0}, ChartPoint::infinity(), {ChartPoint(1)});
  Place x{0, ChartPoint(0)};
  ASSERT_TRUE(category_check(c, CurveKind::C2, x).pass());
  BubbleResult r = inflate_at_zero(c, x);
  EXPECT_EQ(r.curve.field(r.new_x.comp), (FieldTriple{1, 1, 0}));
  EXPECT_EQ(r.new_x.at, ChartPoint(0));
  BubbleResult back = bubble_down(r.curve, CurveKind::C3, r.new_x);
  EXPECT_EQ(back.map.bubble_component, r.new_x.comp);
  EXPECT_TRUE(iso(back.curve, back.new_x, c, x));
}

TEST(Bubble, BubbleDownRejects) {
  MarkedCurve c = line(FieldTriple{1, 0, 0}, ChartPoint::infinity(), {ChartPoint(0)});
  EXPECT_THROW(bubble_down(c, CurveKind::C1, Place{0, ChartPoint(1)}), KindMismatch);
  MarkedCurve empty = line(FieldTriple{1, 0, 0}, ChartPoint::infinity(), {});
  EXPECT_THROW(bubble_down(empty, CurveKind::C2, Place{0, ChartPoint(1)}), PreconditionFailed);
  EXPECT_THROW(inflate_at_zero(c, c.p_infty), PreconditionFailed);
}

TEST(Bubble, RoundTripsOnRandomCurves) {
  gen::Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    gen::WithX a = gen::random_c1(rng, 4);
    BubbleResult up = knudsen_stabilize(a.curve, a.x);
    BubbleResult down = bubble_down(up.curve, CurveKind::C2, up.new_x);
    EXPECT_TRUE(iso(down.curve, down.new_x, a.curve, a.x)) << gen::dump(a.curve) << " x=" << a.x.str();

    gen::WithX b = gen::random_c2(rng, 4);
    BubbleResult d2 = bubble_down(b.curve, CurveKind::C2, b.x);
    BubbleResult u2 = knudsen_stabilize(d2.curve, d2.new_x);
    EXPECT_TRUE(iso(u2.curve, u2.new_x, b.curve, b.x)) << gen::dump(b.curve) << " x=" << b.x.str();

    gen::WithX c = gen::random_c3(rng, 4);
    BubbleResult d3 = bubble_down(c.curve, CurveKind::C3, c.x);
    BubbleResult u3 = inflate_at_zero(d3.curve, d3.new_x);
    EXPECT_TRUE(iso(u3.curve, u3.new_x, c.curve, c.x)) << gen::dump(c.curve) << " x=" << c.x.str();
  }
}
