#include "nodalvf/chart.hpp"

#include <sstream>

#include "nodalvf/error.hpp"

namespace nvf {

ChartPoint ChartPoint::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return ChartPoint(Rational::parse(text));
}

const Rational& ChartPoint::value() const {
  if (infinite_) throw std::logic_error("ChartPoint::value at infinity");
  return value_;
}

std::pair<Rational, Rational> ChartPoint::homogeneous() const {
  if (infinite_) return {Rational(1), Rational(0)};
  return {value_, Rational(1)};
}

ChartPoint ChartPoint::from_homogeneous(const Rational& X, const Rational& Y) {
  if (Y.is_zero()) {
    if (X.is_zero()) throw std::domain_error("[0:0] is not a point");
    return infinity();
  }
  return ChartPoint(X / Y);
}

Rational FieldTriple::value_at(const ChartPoint& at) const {
  if (at.is_infinity()) return p2;
  const Rational& v = at.value();
  return p0 + v * (p1 + v * p2);
}

Rational FieldTriple::weight_at(const ChartPoint& at) const {
  if (at.is_infinity()) return -p1;
  return p1 + Rational(2) * p2 * at.value();
}

int FieldTriple::order_at(const ChartPoint& at) const {
  if (is_zero()) return 3;
  if (!value_at(at).is_zero()) return 0;
  if (!weight_at(at).is_zero()) return 1;
  return 2;
}

std::string FieldTriple::str() const {
  return "(" + p0.str() + ", " + p1.str() + ", " + p2.str() + ")";
}

Mobius::Mobius(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().is_zero()) throw std::domain_error("singular Mobius transformation");
}

ChartPoint Mobius::apply(const ChartPoint& x) const {
  auto [X, Y] = x.homogeneous();
  return ChartPoint::from_homogeneous(a_ * X + b_ * Y, c_ * X + d_ * Y);
}

// With y = g(x) and x = (d y - b)/(a - c y), the pushed field is
//   g'(x) p(x) = [p0 (a - c y)^2 + p1 (d y - b)(a - c y) + p2 (d y - b)^2] / det.
FieldTriple Mobius::push(const FieldTriple& f) const {
  const Rational D = det();
  // (a - c y)^2 = a^2 - 2ac y + c^2 y^2
  // (d y - b)(a - c y) = -ab + (ad + bc) y - cd y^2
  // (d y - b)^2 = b^2 - 2bd y + d^2 y^2
  Rational q0 = f.p0 * a_ * a_ - f.p1 * a_ * b_ + f.p2 * b_ * b_;
  Rational q1 = Rational(-2) * f.p0 * a_ * c_ + f.p1 * (a_ * d_ + b_ * c_) - Rational(2) * f.p2 * b_ * d_;
  Rational q2 = f.p0 * c_ * c_ - f.p1 * c_ * d_ + f.p2 * d_ * d_;
  return {q0 / D, q1 / D, q2 / D};
}

Mobius Mobius::after(const Mobius& o) const {
  return {a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_};
}

namespace {

// Matrix sending [1:0] -> v2, [0:1] -> v1, [1:1] -> v3, i.e. inf, 0, 1 to
// the given points.
Mobius from_standard(const ChartPoint& p0, const ChartPoint& pinf, const ChartPoint& p1) {
  auto [x1, y1] = p0.homogeneous();
  auto [x2, y2] = pinf.homogeneous();
  auto [x3, y3] = p1.homogeneous();
  // Solve l2 * v2 + l1 * v1 = v3.
  Rational det = x2 * y1 - x1 * y2;
  if (det.is_zero()) throw std::domain_error("points for Mobius construction coincide");
  Rational l2 = (x3 * y1 - x1 * y3) / det;
  Rational l1 = (x2 * y3 - x3 * y2) / det;
  if (l1.is_zero() || l2.is_zero()) throw std::domain_error("points for Mobius construction coincide");
  return {l2 * x2, l1 * x1, l2 * y2, l1 * y1};
}

}  // namespace

Mobius Mobius::from_three(std::span<const ChartPoint, 3> p, std::span<const ChartPoint, 3> q) {
  Mobius mp = from_standard(p[0], p[1], p[2]);
  Mobius mq = from_standard(q[0], q[1], q[2]);
  return mq.after(mp.inverse());
}

Mobius Mobius::normalizing_pair(const ChartPoint& p0, const ChartPoint& p1) {
  if (p0 == p1) throw std::domain_error("normalizing_pair needs distinct points");
  if (p1.is_infinity()) return affine(Rational(1), -p0.value());
  if (p0.is_infinity()) return Mobius(Rational(0), Rational(1), Rational(1), -p1.value());  // 1/(x - p1)
  // (x - p0) / (x - p1)
  return Mobius(Rational(1), -p0.value(), Rational(1), -p1.value());
}

Mobius Mobius::normalizing_point(const ChartPoint& p) {
  if (p.is_infinity()) return identity();
  return Mobius(Rational(0), Rational(1), Rational(1), -p.value());
}

bool operator==(const Mobius& m, const Mobius& n) {
  // Proportional matrices.
  return m.a_ * n.b_ == m.b_ * n.a_ && m.a_ * n.c_ == m.c_ * n.a_ && m.a_ * n.d_ == m.d_ * n.a_ &&
         m.b_ * n.c_ == m.c_ * n.b_ && m.b_ * n.d_ == m.d_ * n.b_ && m.c_ * n.d_ == m.d_ * n.c_;
}

std::string Mobius::str() const {
  std::ostringstream os;
  os << "[[" << a_ << ", " << b_ << "], [" << c_ << ", " << d_ << "]]";
  return os.str();
}

}  // namespace nvf
