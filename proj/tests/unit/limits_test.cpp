#include <gtest/gtest.h>

#include <algorithm>

#include "generators.hpp"
#include "nodalvf/error.hpp"
#include "nodalvf/limits.hpp"

using namespace nvf;

namespace {

const ScalePath::Params kT{"t"};

ScalePath tpow(int k, long c = 1) { return ScalePath::monomial(kT, {k}, Rational(c)); }

PathFamily affine(std::vector<ScalePath> ps) { return {LimitMode::Affine, std::move(ps)}; }

std::string limit_key(const PathFamily& f, CenterRule r = CenterRule::Recenter) {
  return type_of_curve(stable_limit(f, r)).key();
}

}  // namespace

TEST(Limits, AffineCollisionsAndEscapes) {
  EXPECT_EQ(limit_key(affine({tpow(0, 0) + tpow(0), tpow(1)})), "{1,2}");
  EXPECT_EQ(limit_key(affine({tpow(0), tpow(-1)})), "[{1},{2}]");
  EXPECT_EQ(limit_key(affine({tpow(0), tpow(-1), tpow(-2)})), "[[{1},{2}],{3}]");
  EXPECT_EQ(limit_key(affine({tpow(-1), tpow(-1) + tpow(0), tpow(-1, -1)})), "[{1,2},{3}]");
}

TEST(Limits, LimitPassesChecks) {
  MarkedCurve c = stable_limit(affine({tpow(0), tpow(-1), tpow(-2)}));
  EXPECT_TRUE(validate_curve(c).pass());
  EXPECT_TRUE(pn_object_check(c).pass());
  EXPECT_EQ(ncr(c), Rational(0));
}

TEST(Limits, DegenerationRejectsVanishingUnit) {
  PathFamily f{LimitMode::Degeneration, {tpow(-1, -1)}};
  EXPECT_THROW(stable_limit(f), PreconditionFailed);
}

TEST(Limits, RulesAgreeAndPermutationsCommute) {
  gen::Rng rng(99);
  for (int i = 0; i < 150; ++i) {
    LimitMode mode = i % 2 ? LimitMode::Affine : LimitMode::Degeneration;
    int n = 1 + i % 4;
    PathFamily f = gen::random_family(rng, mode, n, 1 + (i / 2) % 2);
    MarkedCurve a = stable_limit(f, CenterRule::Recenter);
    MarkedCurve b = stable_limit(f, CenterRule::FirstMarking);
    EXPECT_TRUE(curve_isomorphic(a, b).has_value());

    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    PathFamily g = f;
    for (int k = 0; k < n; ++k) g.paths[k] = f.paths[perm[k]];
    MarkedCurve c = stable_limit(g);
    MarkedCurve a_perm = a;
    for (int k = 0; k < n; ++k) a_perm.markings[k] = a.markings[perm[k]];
    EXPECT_TRUE(curve_isomorphic(a_perm, c).has_value());
  }
}

TEST(Limits, LMTypeOfPath) {
  ScalePath::Params st{"s", "t"};
  auto s = [&](int k, long c) { return ScalePath::monomial(st, {k, 0}, Rational(c)); };
  EXPECT_EQ(lm_type_of_path({s(1, 1), s(2, 1), s(2, 2)}).key(), "23|1");
  EXPECT_EQ(lm_type_of_path({s(0, 1), s(0, 3)}).key(), "12");
}

TEST(Limits, SamplerPathsHaveTheirType) {
  LMType t = LMType::parse("2|13");
  auto y = sampler_paths(t, {1, 2, 3}, {0, 1, -1}, {1, 0, 0});
  ASSERT_EQ(y.size(), 3u);
  EXPECT_EQ(y[0].params(), (ScalePath::Params{"s", "t"}));
}

TEST(Limits, SpecializeIsDeterministicAcrossJobs) {
  SampleGrid g = SampleGrid::parse("a=1,2;b=0,1;c=0");
  EXPECT_EQ(g.position.size(), 2u);
  LMType t = LMType::parse("1|2");
  SpecializationReport one = specialize_lm(t, g, 1), two = specialize_lm(t, g, 3);
  EXPECT_EQ(one.collected, two.collected);
  EXPECT_EQ(one.maximal, two.maximal);
  EXPECT_GT(one.samples, 0u);
  for (const auto& [key, hits] : one.collected) EXPECT_TRUE(PnType::parse(key).valid(2)) << key;
  EXPECT_THROW(SampleGrid::parse("q=1"), ParseError);
}

TEST(Limits, TypeOfCurveRejectsNonObjects) {
  MarkedCurve c;
  c.components = {{0, FieldTriple{0, 1, 0}}};
  c.p_infty = Place{0, ChartPoint::infinity()};
  c.markings = {Place{0, ChartPoint(1)}};
  EXPECT_THROW(type_of_curve(c), NotAPnObject);
}
