#include <gtest/gtest.h>

#include "generators.hpp"
#include "nodalvf/error.hpp"
#include "nodalvf/limits.hpp"

using namespace nvf;

namespace {

// Root x d/dx with p_infty at infinity, glued at 0 to a child -u d/du.
MarkedCurve two_components() {
  MarkedCurve c;
  c.components = {{0, FieldTriple{0, 1, 0}}, {1, FieldTriple{0, -1, 0}}};
  c.nodes = {{Place{0, ChartPoint(0)}, Place{1, ChartPoint(0)}}};
  c.p_infty = Place{0, ChartPoint::infinity()};
  c.markings = {Place{0, ChartPoint(2)}, Place{1, ChartPoint(3)}};
  return c;
}

}  // namespace

TEST(Chart, PushMovesZerosAndKeepsDiscriminant) {
  gen::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Mobius g = gen::random_mobius(rng);
    FieldTriple f{gen::small_rational(rng), gen::small_rational(rng), gen::small_rational(rng)};
    FieldTriple h = g.push(f);
    ChartPoint p(gen::small_rational(rng));
    EXPECT_EQ(f.vanishes_at(p), h.vanishes_at(g.apply(p)));
    if (f.vanishes_at(p)) EXPECT_EQ(f.weight_at(p), h.weight_at(g.apply(p)));
    EXPECT_EQ(g.inverse().push(h), f);
    // The discriminant is invariant up to the square of a scalar; its vanishing is not.
    EXPECT_EQ(f.discriminant().is_zero(), h.discriminant().is_zero());
  }
}

TEST(Chart, FromThree) {
  std::array<ChartPoint, 3> p{ChartPoint(0), ChartPoint(1), ChartPoint::infinity()};
  std::array<ChartPoint, 3> q{ChartPoint(Rational(2)), ChartPoint(Rational(-1, 3)), ChartPoint(5)};
  Mobius g = Mobius::from_three(p, q);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(g.apply(p[i]), q[i]);
}

TEST(Curve, ValidateAndCategory) {
  MarkedCurve c = two_components();
  EXPECT_TRUE(validate_curve(c).pass()) << validate_curve(c).str();
  EXPECT_TRUE(category_check(c, CurveKind::V).pass()) << category_check(c, CurveKind::V).str();
  EXPECT_EQ(ncr(c), Rational(1));
  EXPECT_EQ(field_value(c, Place{1, ChartPoint(3)}), Rational(-3));
  EXPECT_THROW(field_value(c, Place{0, ChartPoint(0)}), SingularPoint);

  MarkedCurve bad = c;
  bad.components[1].field = FieldTriple{0, 2, 0};
  EXPECT_TRUE(validate_curve(bad).has("weight_matching"));

  bad = c;
  bad.markings[0] = Place{0, ChartPoint(0)};
  EXPECT_TRUE(validate_curve(bad).has("distinct"));

  bad = c;
  bad.nodes.push_back({Place{0, ChartPoint(5)}, Place{1, ChartPoint(7)}});
  EXPECT_TRUE(validate_curve(bad).has("tree"));

  bad = c;
  bad.p_infty = Place{0, ChartPoint(1)};
  EXPECT_TRUE(category_check(bad, CurveKind::V).has("p_infty_vanishing"));
  EXPECT_THROW(ncr(bad), FieldNotVanishing);

  bad = c;
  bad.markings.pop_back();
  EXPECT_TRUE(category_check(bad, CurveKind::V).has("ampleness"));

  EXPECT_TRUE(category_check(c, CurveKind::C2).has("extra_section"));
  EXPECT_TRUE(category_check(c, CurveKind::C1, c.p_infty).pass());
  EXPECT_TRUE(category_check(c, CurveKind::C2, c.p_infty).has("extra_distinct"));
  EXPECT_TRUE(category_check(c, CurveKind::C2, Place{0, ChartPoint(0)}).has("extra_smooth"));
}

TEST(Curve, NcrOfLinearField) {
  for (long t0 : {0L, 1L, 5L, -2L}) {
    MarkedCurve c;
    c.components = {{0, FieldTriple{0, -t0, -1}}};
    c.p_infty = Place{0, ChartPoint(0)};
    EXPECT_EQ(ncr(c), Rational(t0));
  }
}

TEST(Curve, TwistedDegree) {
  MarkedCurve c = two_components();
  // one node, p_infty, one marking
  EXPECT_EQ(twisted_degree(c, 0, 0, std::nullopt), 1 - 2 + 1 + 2);
  EXPECT_EQ(twisted_degree(c, 1, 2, Place{1, ChartPoint(1)}), 1 - 2 + 2 + 2);
}

TEST(Curve, IsomorphicUnderChartChangesAndRelabeling) {
  gen::Rng rng(11);
  for (int i = 0; i < 60; ++i) {
    gen::WithX w = gen::random_c1(rng, 4);
    gen::Moved m = gen::scramble(w.curve, w.x, rng);
    auto iso = curve_isomorphic(w.curve, m.curve, w.x, m.x);
    ASSERT_TRUE(iso.has_value()) << gen::dump(w.curve) << "\n" << gen::dump(m.curve);
    for (const auto& [id, g] : iso->charts)
      EXPECT_EQ(g.push(w.curve.field(id)), m.curve.field(iso->components.at(id)));
  }
}

TEST(Curve, NonIsomorphicWhenMarkingsSwapAcrossComponents) {
  MarkedCurve c = two_components();
  MarkedCurve d = c;
  std::swap(d.markings[0], d.markings[1]);
  EXPECT_FALSE(curve_isomorphic(c, d).has_value());
  MarkedCurve e = c;
  e.components[0].field = FieldTriple{0, 2, 0};
  e.components[1].field = FieldTriple{0, -2, 0};
  EXPECT_FALSE(curve_isomorphic(c, e).has_value());
  // Scaling the coordinate on one component rescales nothing intrinsic.
  MarkedCurve f = change_chart(c, 1, Mobius::affine(Rational(4), Rational(0)));
  EXPECT_TRUE(curve_isomorphic(c, f).has_value());
}

TEST(Curve, FlowIsAdditive) {
  FieldTriple f{1, 2, 1};  // (1 + x)^2 d/dx
  ChartPoint x0(3);
  ChartPoint a = flow(f, flow(f, x0, Rational(1, 2)), Rational(2, 3));
  EXPECT_EQ(a, flow(f, x0, Rational(7, 6)));
  EXPECT_EQ(flow(FieldTriple{2, 0, 0}, ChartPoint(1), Rational(3)), ChartPoint(7));
  EXPECT_EQ(flow(f, ChartPoint(-1), Rational(5)), ChartPoint(-1));
  EXPECT_THROW(flow(FieldTriple{0, 1, 0}, ChartPoint(1), Rational(1)), PreconditionFailed);
}

TEST(Curve, GanActionOnWitnesses) {
  for (const auto& t : pn_types(3)) {
    MarkedCurve w = pn_witness(t);
    std::vector<Rational> s1{1, Rational(-2, 3), 5}, s2{Rational(1, 2), 4, -1}, s12{Rational(3, 2), Rational(10, 3), 4};
    MarkedCurve lhs = gan_act(gan_act(w, s1), s2);
    EXPECT_EQ(gen::dump(lhs), gen::dump(gan_act(w, s12)));
    EXPECT_EQ(type_of_curve(lhs).key(), t.key());
  }
  MarkedCurve c = two_components();
  EXPECT_THROW(gan_act(c, {0, 0}), PreconditionFailed);
}
