#include "nodalvf/scale_path.hpp"

#include <sstream>

namespace nvf {

ScalePath::ScalePath(Params params)
    : ScalePath(std::move(params), SparsePoly<Rational>()) {}

ScalePath::ScalePath(Params params, SparsePoly<Rational> poly) {
  if (params.size() > kMaxVars) throw RankTooLarge("at most 4 parameters are supported");
  params_ = std::make_shared<const Params>(std::move(params));
  if (poly.is_zero())
    poly_ = SparsePoly<Rational>(params_->size());
  else
    poly_ = std::move(poly);
}

ScalePath ScalePath::constant(const Params& params, const Rational& c) {
  return monomial(params, Exponent{}, c);
}

ScalePath ScalePath::monomial(const Params& params, const Exponent& e, const Rational& c) {
  for (std::size_t i = params.size(); i < kMaxVars; ++i)
    if (e[i] != 0) throw ParamMismatch("exponent has more slots than parameters");
  return ScalePath(params, SparsePoly<Rational>::monomial(params.size(), e, c));
}

ScalePath ScalePath::variable(const Params& params, const std::string& name) {
  ScalePath p(params);
  return monomial(params, Exponent::unit(p.index_of(name)), Rational(1));
}

std::size_t ScalePath::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < params_->size(); ++i)
    if ((*params_)[i] == name) return i;
  throw ParamMismatch("no parameter named '" + name + "'");
}

Exponent ScalePath::valuation() const {
  if (poly_.is_zero()) throw ZeroPath("valuation of the zero path is +infinity");
  return poly_.leading().first;
}

const Rational& ScalePath::leading_coefficient() const {
  if (poly_.is_zero()) throw ZeroPath("leading coefficient of the zero path");
  return poly_.leading().second;
}

ScalePath ScalePath::truncated() const {
  if (poly_.is_zero()) throw ZeroPath("truncation of the zero path");
  return *this - monomial(*params_, poly_.leading().first, poly_.leading().second);
}

void ScalePath::require_same(const ScalePath& o) const {
  if (params_ != o.params_ && *params_ != *o.params_)
    throw ParamMismatch("scale paths over different parameter tuples");
}

ScalePath operator+(const ScalePath& a, const ScalePath& b) {
  a.require_same(b);
  return ScalePath(a.params_, a.poly_ + b.poly_);
}

ScalePath operator-(const ScalePath& a, const ScalePath& b) {
  a.require_same(b);
  return ScalePath(a.params_, a.poly_ - b.poly_);
}

ScalePath operator*(const ScalePath& a, const ScalePath& b) {
  a.require_same(b);
  return ScalePath(a.params_, a.poly_ * b.poly_);
}

bool operator==(const ScalePath& a, const ScalePath& b) {
  return *a.params_ == *b.params_ && a.poly_ == b.poly_;
}

std::string ScalePath::str() const {
  if (poly_.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly_.terms()) {
    bool mono = false;
    for (std::size_t i = 0; i < rank(); ++i) mono = mono || e[i] != 0;
    std::string cs = c.str();
    if (!first) {
      if (c.sign() < 0) {
        os << " - ";
        cs = (-c).str();
      } else {
        os << " + ";
      }
    }
    first = false;
    if (!mono) {
      os << cs;
      continue;
    }
    if (cs == "-1") os << "-";
    else if (cs != "1") os << cs << "*";
    bool lead = true;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (e[i] == 0) continue;
      if (!lead) os << "*";
      lead = false;
      os << (*params_)[i];
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

ValLc path_val_lc(const ScalePath& p) { return {p.valuation(), p.leading_coefficient()}; }

}  // namespace nvf
