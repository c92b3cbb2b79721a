#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nodalvf/rational.hpp"
#include "nodalvf/sparse_poly.hpp"

namespace nvf {

// Finite Laurent polynomial in an ordered tuple of degeneration parameters.
//
// The parameter order is the order of magnitude: earlier parameters are
// infinitesimally smaller than every power of later ones, so the dominant
// term of a path is its lexicographically minimal exponent tuple. The
// parameter called "t" (when present) is the one entering 1 + t*x.
class ScalePath {
 public:
  using Params = std::vector<std::string>;

  ScalePath() = default;
  explicit ScalePath(Params params);
  ScalePath(Params params, SparsePoly<Rational> poly);

  static ScalePath constant(const Params& params, const Rational& c);
  static ScalePath monomial(const Params& params, const Exponent& e, const Rational& c);
  static ScalePath variable(const Params& params, const std::string& name);

  const Params& params() const { return *params_; }
  std::size_t rank() const { return params_->size(); }
  const SparsePoly<Rational>& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // Index of a named parameter; throws ParamMismatch if absent.
  std::size_t index_of(const std::string& name) const;

  Rational coeff_at(const Exponent& e) const { return poly_.coeff(e); }

  // Lex-minimal exponent and its coefficient; ZeroPath for the zero path.
  Exponent valuation() const;
  const Rational& leading_coefficient() const;
  // The path with its leading term removed.
  ScalePath truncated() const;

  ScalePath operator-() const { return ScalePath(params_, -poly_); }
  friend ScalePath operator+(const ScalePath& a, const ScalePath& b);
  friend ScalePath operator-(const ScalePath& a, const ScalePath& b);
  friend ScalePath operator*(const ScalePath& a, const ScalePath& b);
  ScalePath scaled(const Rational& c) const { return ScalePath(params_, poly_.scaled(c)); }
  ScalePath shifted(const Exponent& e) const { return ScalePath(params_, poly_.shifted(e)); }

  friend bool operator==(const ScalePath& a, const ScalePath& b);

  std::string str() const;

 private:
  ScalePath(std::shared_ptr<const Params> params, SparsePoly<Rational> poly)
      : params_(std::move(params)), poly_(std::move(poly)) {}
  void require_same(const ScalePath& o) const;

  std::shared_ptr<const Params> params_ = std::make_shared<const Params>();
  SparsePoly<Rational> poly_;
};

struct ValLc {
  Exponent valuation;
  Rational lead;
};

ValLc path_val_lc(const ScalePath& p);

}  // namespace nvf
