#include <gtest/gtest.h>

#include "generators.hpp"
#include "nodalvf/error.hpp"
#include "nodalvf/hopf.hpp"
#include "nodalvf/limits.hpp"
#include "nodalvf/localized.hpp"

using namespace nvf;

namespace {

ScalePath random_path(gen::Rng& rng, const ScalePath::Params& ps) {
  std::uniform_int_distribution<int> e(-2, 2), n(0, 3);
  ScalePath p(ps);
  for (int k = n(rng); k > 0; --k) {
    Exponent x;
    for (std::size_t i = 0; i < ps.size(); ++i) x[i] = e(rng);
    p = p + ScalePath::monomial(ps, x, gen::small_rational(rng, 3, 2));
  }
  return p;
}

LocalizedElement random_local(gen::Rng& rng) {
  std::uniform_int_distribution<int> e(0, 2), c(-3, 3), n(0, 3), d(0, 1);
  std::vector<IntPoly::Term> terms;
  for (int k = n(rng); k > 0; --k) terms.push_back({Exponent{e(rng), e(rng), e(rng), 0}, Integer(c(rng))});
  return LocalizedElement(IntPoly::from_terms(4, terms), {d(rng), d(rng), 0});
}

template <class T>
void ring_axioms(const T& a, const T& b, const T& c) {
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a + b, b + a);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ(a * (b + c), a * b + a * c);
}

}  // namespace

TEST(Properties, RingAxioms) {
  gen::Rng rng(1);
  ScalePath::Params ps{"s", "t"};
  for (int i = 0; i < 1000; ++i) {
    ring_axioms(gen::small_rational(rng), gen::small_rational(rng), gen::small_rational(rng));
    ring_axioms(random_path(rng, ps), random_path(rng, ps), random_path(rng, ps));
    ring_axioms(random_local(rng), random_local(rng), random_local(rng));
  }
}

TEST(Properties, ValuationIsMultiplicative) {
  gen::Rng rng(2);
  ScalePath::Params ps{"s", "t"};
  for (int i = 0; i < 1000; ++i) {
    ScalePath p = random_path(rng, ps), q = random_path(rng, ps);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).valuation(), p.valuation() + q.valuation());
    EXPECT_EQ((p * q).leading_coefficient(), p.leading_coefficient() * q.leading_coefficient());
  }
}

TEST(Properties, NormalizeIsIdempotent) {
  gen::Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    LocalizedElement a = random_local(rng);
    IntPoly u = unit_poly(1);
    LocalizedElement raw = LocalizedElement::raw(a.numerator() * u, {a.denom_exponents()[0] + 1, a.denom_exponents()[1], 0});
    LocalizedElement n = localized_normalize(raw);
    EXPECT_EQ(localized_normalize(n).numerator(), n.numerator());
    EXPECT_EQ(n, a);
    EXPECT_TRUE(equal_by_cross_multiplication(raw, a));
  }
}

TEST(Properties, GroupLaw) {
  gen::Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    Rational a = gen::small_rational(rng), b = gen::small_rational(rng), c = gen::small_rational(rng),
             tau = gen::small_rational(rng);
    auto point = [&](const Rational& x) { return !(Rational(1) + tau * x).is_zero(); };
    if (!point(a) || !point(b) || !point(c)) {
      if (!point(a)) EXPECT_THROW(group_law(a, b, tau), NotAPoint);
      continue;
    }
    EXPECT_EQ(group_law(group_law(a, b, tau), c, tau), group_law(a, group_law(b, c, tau), tau));
    EXPECT_EQ(group_law(a, 0, tau), a);
    EXPECT_EQ(group_law(a, group_inverse(a, tau), tau), Rational(0));
    EXPECT_EQ((Rational(1) + tau * a) * (Rational(1) + tau * b), Rational(1) + tau * group_law(a, b, tau));
  }
}

TEST(Properties, NcrIsChartInvariant) {
  gen::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    MarkedCurve c = gen::random_grown(rng, 3);
    Rational before = ncr(c);
    MarkedCurve moved = gen::scramble(c, std::nullopt, rng).curve;
    EXPECT_EQ(ncr(moved), before);
  }
}

TEST(Properties, IsomorphismIsReflexiveAndSymmetric) {
  gen::Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    gen::WithX a = gen::random_c2(rng, 4);
    gen::WithX b = gen::random_c2(rng, 4);
    EXPECT_TRUE(curve_isomorphic(a.curve, a.curve, a.x, a.x).has_value());
    EXPECT_EQ(curve_isomorphic(a.curve, b.curve, a.x, b.x).has_value(),
              curve_isomorphic(b.curve, a.curve, b.x, a.x).has_value());
  }
}

TEST(Properties, PnObjectsAreVCurves) {
  gen::Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    PathFamily f = gen::random_family(rng, i % 2 ? LimitMode::Affine : LimitMode::Degeneration, 1 + i % 5, 1 + i % 2);
    MarkedCurve c = stable_limit(f);
    ASSERT_TRUE(pn_object_check(c).pass());
    EXPECT_TRUE(category_check(c, CurveKind::V).pass()) << gen::dump(c);
  }
}

TEST(Properties, BubblingKeepsNcrAndNormalizesInflation) {
  gen::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    gen::WithX a = gen::random_c1(rng, 4);
    BubbleResult r = knudsen_stabilize(a.curve, a.x);
    EXPECT_EQ(ncr(r.curve), ncr(a.curve));
    EXPECT_TRUE(validate_curve(r.curve).pass());
    gen::WithX b = gen::random_c3(rng, 4);
    BubbleResult d = bubble_down(b.curve, CurveKind::C3, b.x);
    BubbleResult u = inflate_at_zero(d.curve, d.new_x);
    if (!u.map.identity) EXPECT_EQ(field_value(u.curve, u.new_x), Rational(1));
    EXPECT_TRUE(validate_curve(d.curve).pass());
  }
}

TEST(Properties, AffineTranslationShiftsOneVertexLimits) {
  const ScalePath::Params ps{"t"};
  PathFamily f{LimitMode::Affine, {ScalePath::constant(ps, 2) + ScalePath::monomial(ps, {1}, 1),
                                   ScalePath::constant(ps, 5)}};
  PathFamily g = f;
  for (auto& p : g.paths) p = p + ScalePath::constant(ps, Rational(-7, 2));
  MarkedCurve a = stable_limit(f), b = stable_limit(g);
  ASSERT_EQ(a.components.size(), 1u);
  for (std::size_t j = 0; j < 2; ++j)
    EXPECT_EQ(b.markings[j].at, ChartPoint(a.markings[j].at.value() + Rational(-7, 2)));
}

TEST(Properties, GroupTranslationInvarianceInDegenerationMode) {
  // x -> c + x + t c x preserves (1 + t x) d/dx; adding c alone need not.
  const ScalePath::Params ps{"t"};
  ScalePath t = ScalePath::variable(ps, "t");
  auto path = [&](long c3) { return ScalePath::monomial(ps, {-1}, -1) + ScalePath::monomial(ps, {3}, c3); };
  PathFamily f{LimitMode::Degeneration, {path(1), path(2)}};
  ScalePath c = t;
  PathFamily g = f, naive = f;
  for (auto& p : g.paths) p = c + p + t * c * p;
  for (auto& p : naive.paths) p = p + c;
  EXPECT_EQ(type_of_curve(stable_limit(f)).key(), "[{1},{2}]");
  EXPECT_TRUE(curve_isomorphic(stable_limit(f), stable_limit(g)).has_value());
  EXPECT_EQ(type_of_curve(stable_limit(naive)).key(), "{1,2}");
}

TEST(Properties, SpecializedTypesSitBelowTheirSource) {
  SampleGrid g = SampleGrid::parse("a=1,2,3;b=0,1;c=0,1");
  for (const char* key : {"1|2|3", "12|3", "3|12"}) {
    LMType t = LMType::parse(key);
    SpecializationReport r = specialize_lm(t, g);
    for (const auto& m : r.maximal) EXPECT_LE(stratum_dim(PnType::parse(m)), stratum_dim(t)) << key << " " << m;
  }
}
