#pragma once

#include <array>
#include <optional>
#include <string>

#include "nodalvf/rational.hpp"
#include "nodalvf/sparse_poly.hpp"

namespace nvf {

// Polynomials over Z in t (slot 0) and chart generators x1, x2, x3 (slots 1..3).
using IntPoly = SparsePoly<Integer>;

inline constexpr std::size_t kSlotT = 0;
inline constexpr std::size_t kChartGens = 3;

IntPoly int_t();
IntPoly int_x(std::size_t i);  // i in 1..3
IntPoly int_const(long c);
// The distinguished unit 1 + t*x_i.
IntPoly unit_poly(std::size_t i);

// Exact quotient by 1 + t*x_i, or nullopt when it does not divide.
std::optional<IntPoly> divide_by_unit(const IntPoly& p, std::size_t i);

// Element of Z[t, x1, x2, x3] localized at the units 1 + t*x_i:
//   numerator / prod_i (1 + t*x_i)^{e_i}.
// Values are kept in canonical form: no unit with positive exponent divides
// the numerator. Two elements are equal iff their canonical forms agree.
class LocalizedElement {
 public:
  using DenomExponents = std::array<int, kChartGens>;

  LocalizedElement() : LocalizedElement(IntPoly(kMaxVars)) {}
  explicit LocalizedElement(IntPoly numerator, DenomExponents denom = {});

  static LocalizedElement constant(long c) { return LocalizedElement(int_const(c)); }
  static LocalizedElement t() { return LocalizedElement(int_t()); }
  static LocalizedElement x(std::size_t i) { return LocalizedElement(int_x(i)); }

  const IntPoly& numerator() const { return num_; }
  const DenomExponents& denom_exponents() const { return den_; }
  IntPoly denominator() const;

  bool is_zero() const { return num_.is_zero(); }

  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);
  LocalizedElement operator-() const;

  // Inverse when the numerator is +-1 times a product of distinguished units;
  // NotInvertible otherwise.
  LocalizedElement inverse() const;
  friend LocalizedElement operator/(const LocalizedElement& a, const LocalizedElement& b) {
    return a * b.inverse();
  }

  // Z[t]-algebra map sending x_i to images[i-1]. Unused generators should map
  // to themselves. NotInvertible if a denominator unit maps to a non-unit.
  LocalizedElement substitute(const std::array<LocalizedElement, kChartGens>& images) const;

  // Image under t -> 0, where every distinguished unit becomes 1.
  LocalizedElement at_t_zero() const;

  // Unnormalized value; only localized_normalize and equality canonicalize it.
  static LocalizedElement raw(IntPoly numerator, DenomExponents denom);
  bool is_canonical() const { return canonical_; }

  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);

  std::string str() const;

 private:
  struct Canonical {};
  LocalizedElement(IntPoly n, DenomExponents d, Canonical) : num_(std::move(n)), den_(d) {}
  void normalize();
  friend LocalizedElement localized_normalize(const LocalizedElement& e);

  IntPoly num_;
  DenomExponents den_{};
  bool canonical_ = true;
};

// Canonical representative: divides out units while exactly divisible.
LocalizedElement localized_normalize(const LocalizedElement& e);

// a/d == a'/d' iff a*d' == a'*d as polynomials.
bool equal_by_cross_multiplication(const LocalizedElement& a, const LocalizedElement& b);

std::string int_poly_str(const IntPoly& p);

}  // namespace nvf
