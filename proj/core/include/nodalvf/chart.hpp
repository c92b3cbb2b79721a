#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "nodalvf/rational.hpp"

namespace nvf {

// A point of P^1 in a fixed affine chart x: either a rational value or infinity.
class ChartPoint {
 public:
  ChartPoint() = default;
  ChartPoint(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  ChartPoint(long v) : value_(v) {}                 // NOLINT(google-explicit-constructor)
  static ChartPoint infinity() {
    ChartPoint p;
    p.infinite_ = true;
    return p;
  }
  static ChartPoint parse(std::string_view text);  // "p/q" or "inf"

  bool is_infinity() const { return infinite_; }
  const Rational& value() const;  // precondition: finite

  // Homogeneous coordinates [X : Y] with Y = 0 at infinity.
  std::pair<Rational, Rational> homogeneous() const;
  static ChartPoint from_homogeneous(const Rational& X, const Rational& Y);

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

  friend bool operator==(const ChartPoint& a, const ChartPoint& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  // Finite points in numeric order, then infinity.
  friend std::strong_ordering operator<=>(const ChartPoint& a, const ChartPoint& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (a.infinite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  bool infinite_ = false;
  Rational value_;
};

// Vector field (p0 + p1 x + p2 x^2) d/dx on P^1, written in the chart x.
struct FieldTriple {
  Rational p0, p1, p2;

  static FieldTriple zero() { return {}; }
  static FieldTriple translation() { return {Rational(1), Rational(0), Rational(0)}; }

  bool is_zero() const { return p0.is_zero() && p1.is_zero() && p2.is_zero(); }

  // p(v) at a finite point; at infinity the scalar p2, whose vanishing is
  // chart independent.
  Rational value_at(const ChartPoint& at) const;
  // Linear coefficient at a zero: p'(v) at a finite point, -p1 at infinity.
  Rational weight_at(const ChartPoint& at) const;
  bool vanishes_at(const ChartPoint& at) const { return value_at(at).is_zero(); }
  // Order of vanishing at a point (0, 1, 2, or 3 for the zero field).
  int order_at(const ChartPoint& at) const;
  // p1^2 - 4 p0 p2; invariant under chart changes.
  Rational discriminant() const { return p1 * p1 - Rational(4) * p0 * p2; }

  std::string str() const;
  friend bool operator==(const FieldTriple&, const FieldTriple&) = default;
};

// Projective transformation x -> (a x + b) / (c x + d).
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  Mobius(Rational a, Rational b, Rational c, Rational d);

  static Mobius identity() { return {}; }
  static Mobius affine(const Rational& scale, const Rational& shift) {
    return {scale, shift, Rational(0), Rational(1)};
  }
  // The unique map sending three distinct points p[i] to q[i].
  static Mobius from_three(std::span<const ChartPoint, 3> p, std::span<const ChartPoint, 3> q);
  // A map sending p0 to 0 and p1 to infinity (p0 != p1).
  static Mobius normalizing_pair(const ChartPoint& p0, const ChartPoint& p1);
  // A map sending p to infinity.
  static Mobius normalizing_point(const ChartPoint& p);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }
  Rational det() const { return a_ * d_ - b_ * c_; }

  ChartPoint apply(const ChartPoint& x) const;
  // Pushforward g_* of a vector field, expressed in the target chart.
  FieldTriple push(const FieldTriple& f) const;

  Mobius inverse() const { return {d_, -b_, -c_, a_}; }
  // (this o other)(x) = this(other(x))
  Mobius after(const Mobius& other) const;

  std::string str() const;
  // Equality as projective maps.
  friend bool operator==(const Mobius& m, const Mobius& n);

 private:
  Rational a_, b_, c_, d_;
};

}  // namespace nvf
