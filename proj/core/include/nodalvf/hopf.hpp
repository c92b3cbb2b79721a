#pragma once

#include <string>
#include <vector>

#include "nodalvf/diagnostics.hpp"
#include "nodalvf/localized.hpp"

namespace nvf {

// Hopf Z[t]-algebra structure on H = Z[t, x]_{1+tx}, given by the images of
// the generator x. Tensor factors are modeled by chart generators: one factor
// uses x1, two factors use (x1, x2), three use (x1, x2, x3).
//
// Every structure map is a Z[t]-algebra homomorphism, so it is determined by
// the image of x, and an identity between two composites of such maps holds
// on all of H as soon as it holds on x. The checks below therefore evaluate
// each axiom on the generator only.
struct HopfPresentation {
  LocalizedElement mult_left;   // image of x (x) 1 under H (x) H -> H, in x1
  LocalizedElement mult_right;  // image of 1 (x) x, in x1
  LocalizedElement comult;      // image of x in (x1, x2)
  LocalizedElement counit;      // image of x in Z[t]
  LocalizedElement antipode;    // image of x, in x1

  // x -> x(x)1 + 1(x)x + t x(x)x, counit 0, antipode -x/(1+tx).
  static HopfPresentation interpolating();
};

struct AxiomRow {
  std::string name;
  bool pass = false;
  LocalizedElement residual;  // zero on success
  std::string message;        // set when the residual could not be formed
};

struct HopfReport {
  std::vector<AxiomRow> rows;

  bool pass() const;
  const AxiomRow& row(const std::string& name) const;
  Diagnostics diagnostics() const;
};

// Coassociativity, counit, antipode and compatibility of the comultiplication
// with the localization, each as an exact identity on x.
HopfReport hopf_verify_axioms(const HopfPresentation& h);

// Checks that y = 1 + t x is grouplike: Delta(y) = y(x)y, eps(y) = 1 and
// S(y) y = 1. With at_t_zero set, residuals are specialized to t = 0 first.
HopfReport hopf_check_iso_to_gm(const HopfPresentation& h, bool at_t_zero = false);

// Group law on points of G over a field with t specialized to tau.
Rational group_law(const Rational& a, const Rational& b, const Rational& tau);
Rational group_inverse(const Rational& a, const Rational& tau);

// Action of G on the affine line, alpha(a, x), as a polynomial with a in
// slot x1 and x in slot x2.
IntPoly interpolating_action();

// d(alpha)/da at a = 0 must be the field coefficient 1 + t x, and the action
// must be compatible with the group law. With at_t_zero the residuals are
// specialized to t = 0.
HopfReport action_derivative_check(const IntPoly& action = interpolating_action(),
                                   bool at_t_zero = false);

}  // namespace nvf
