#include <gtest/gtest.h>

#include <random>

#include "nodalvf/error.hpp"
#include "nodalvf/localized.hpp"
#include "nodalvf/scale_path.hpp"
#include "oracles.hpp"

using namespace nvf;

TEST(Rational, ParseAndCanonicalForm) {
  EXPECT_EQ(Rational::parse("6/-4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_GT(Rational(5), Rational(9, 2));
}

namespace {

IntPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-2, 3), c(-4, 4), n(0, 5);
  std::vector<IntPoly::Term> terms;
  for (int k = n(rng); k > 0; --k) terms.push_back({Exponent{e(rng), e(rng), e(rng), e(rng)}, Integer(c(rng))});
  return IntPoly::from_terms(4, terms);
}

oracle::Dense dense(const IntPoly& p) {
  oracle::Dense d;
  for (const auto& [e, c] : p.terms()) d[{e[0], e[1], e[2], e[3]}] = c;
  return d;
}

}  // namespace

TEST(SparsePoly, ArithmeticAgreesWithDenseOracle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    IntPoly a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ(dense(a * b), oracle::dense_mul(dense(a), dense(b)));
    EXPECT_EQ(dense(a + b), oracle::dense_add(dense(a), dense(b)));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(SparsePoly, LeadingTermIsLexMinimal) {
  auto p = IntPoly::from_terms(2, {{Exponent{1, 0}, Integer(2)}, {Exponent{0, 5}, Integer(3)}, {Exponent{0, -1}, Integer(1)}});
  EXPECT_EQ(p.leading().first, (Exponent{0, -1}));
  EXPECT_THROW(IntPoly(5), RankTooLarge);
}

TEST(ScalePath, ValuationAndTruncation) {
  ScalePath::Params ps{"s", "t"};
  ScalePath p = ScalePath::monomial(ps, {1, -3}, Rational(2)) + ScalePath::monomial(ps, {0, 4}, Rational(-1));
  EXPECT_EQ(p.valuation(), (Exponent{0, 4}));
  EXPECT_EQ(p.leading_coefficient(), Rational(-1));
  EXPECT_EQ(p.truncated().valuation(), (Exponent{1, -3}));
  EXPECT_THROW(ScalePath(ps).valuation(), ZeroPath);
  EXPECT_EQ(p.index_of("t"), 1u);
  EXPECT_THROW(p.index_of("u"), ParamMismatch);
  EXPECT_THROW(p + ScalePath::constant({"t"}, Rational(1)), ParamMismatch);
}

TEST(Localized, CanonicalFormAndInverse) {
  using L = LocalizedElement;
  L u = L(unit_poly(1));
  L q = L::x(1) / u;
  EXPECT_EQ(q * u, L::x(1));
  EXPECT_EQ(u.inverse() * u, L::constant(1));
  EXPECT_THROW(L::x(1).inverse(), NotInvertible);
  L r = L::raw(unit_poly(1) * int_x(2), {1, 0, 0});
  EXPECT_EQ(localized_normalize(r), L::x(2));
  EXPECT_TRUE(equal_by_cross_multiplication(r, L::x(2)));
  EXPECT_EQ((L::x(1) / u).at_t_zero(), L::x(1));
}

TEST(Localized, DivideByUnit) {
  IntPoly p = unit_poly(2) * (int_x(1) + int_const(3));
  auto q = divide_by_unit(p, 2);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, int_x(1) + int_const(3));
  EXPECT_FALSE(divide_by_unit(int_x(1), 1).has_value());
}

TEST(Localized, SubstituteSendsUnitsToUnits) {
  using L = LocalizedElement;
  // x1 -> x1 + x2 + t x1 x2 sends 1 + t x1 to (1 + t x1)(1 + t x2).
  L sum = L::x(1) + L::x(2) + L::t() * L::x(1) * L::x(2);
  L img = L(unit_poly(1)).inverse().substitute({sum, L::x(2), L::x(3)});
  EXPECT_EQ(img * L(unit_poly(1)) * L(unit_poly(2)), L::constant(1));
  EXPECT_THROW(L(unit_poly(1)).inverse().substitute({L::x(2) * L::x(2), L::x(2), L::x(3)}), NotInvertible);
}
