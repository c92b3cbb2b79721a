#include "nodalvf/hopf.hpp"

#include <functional>

#include "nodalvf/error.hpp"

namespace nvf {

namespace {

using L = LocalizedElement;
using Images = std::array<L, kChartGens>;

L x1() { return L::x(1); }
L x2() { return L::x(2); }
L x3() { return L::x(3); }
L one() { return L::constant(1); }
L t() { return L::t(); }

// Moves an element written in x1 (or x1, x2) to other generator slots.
L in_slots(const L& e, const L& a, const L& b = x2(), const L& c = x3()) {
  return e.substitute(Images{a, b, c});
}

AxiomRow evaluate(const std::string& name, const std::function<L()>& residual, bool at_zero) {
  AxiomRow row;
  row.name = name;
  try {
    row.residual = residual();
    if (at_zero) row.residual = row.residual.at_t_zero();
    row.pass = row.residual.is_zero();
    if (!row.pass) row.message = "residual " + row.residual.str();
  } catch (const NotInvertible& e) {
    row.pass = false;
    row.message = std::string("image leaves the localization: ") + e.what();
  }
  return row;
}

// Returns the first nonzero residual of a pair of identities.
L first_nonzero(const L& a, const L& b) { return a.is_zero() ? b : a; }

}  // namespace

HopfPresentation HopfPresentation::interpolating() {
  HopfPresentation h;
  h.mult_left = x1();
  h.mult_right = x1();
  h.comult = x1() + x2() + t() * x1() * x2();
  h.counit = L::constant(0);
  h.antipode = -x1() / (one() + t() * x1());
  return h;
}

bool HopfReport::pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

const AxiomRow& HopfReport::row(const std::string& name) const {
  for (const auto& r : rows)
    if (r.name == name) return r;
  throw std::out_of_range("no axiom row named " + name);
}

Diagnostics HopfReport::diagnostics() const {
  Diagnostics d;
  for (const auto& r : rows)
    if (!r.pass) d.fail(r.name, "generator x", r.message);
  return d;
}

HopfReport hopf_verify_axioms(const HopfPresentation& h) {
  const L& delta = h.comult;
  // Delta on the second and third factors.
  const L delta23 = in_slots(delta, x2(), x3(), x3());
  auto mult = [&](const L& e) { return in_slots(e, h.mult_left, h.mult_right); };
  const L unit_counit = h.counit;  // eta(eps(x)), already a constant in Z[t]

  HopfReport rep;
  rep.rows.push_back(evaluate("coassociativity", [&] {
    L left = in_slots(delta, delta, x3());   // (Delta (x) id) Delta
    L right = in_slots(delta, x1(), delta23);  // (id (x) Delta) Delta
    return left - right;
  }, false));
  rep.rows.push_back(evaluate("counit", [&] {
    L left = in_slots(delta, h.counit, x1()) - x1();   // (eps (x) id) Delta = id
    L right = in_slots(delta, x1(), h.counit) - x1();  // (id (x) eps) Delta = id
    return first_nonzero(left, right);
  }, false));
  rep.rows.push_back(evaluate("antipode", [&] {
    const L s2 = in_slots(h.antipode, x2());
    L left = mult(in_slots(delta, h.antipode, x2())) - unit_counit;  // m (S (x) id) Delta
    L right = mult(in_slots(delta, x1(), s2)) - unit_counit;         // m (id (x) S) Delta
    return first_nonzero(left, right);
  }, false));
  rep.rows.push_back(evaluate("localization", [&] {
    return (one() + t() * delta) - (one() + t() * x1()) * (one() + t() * x2());
  }, false));
  return rep;
}

HopfReport hopf_check_iso_to_gm(const HopfPresentation& h, bool at_t_zero) {
  const L y = one() + t() * x1();
  HopfReport rep;
  rep.rows.push_back(evaluate("grouplike", [&] {
    L dy = one() + t() * h.comult;
    return dy - y * in_slots(y, x2());
  }, at_t_zero));
  rep.rows.push_back(evaluate("counit", [&] { return (one() + t() * h.counit) - one(); }, at_t_zero));
  rep.rows.push_back(evaluate("inverse", [&] {
    L sy = one() + t() * h.antipode;
    return sy * y - one();
  }, at_t_zero));
  return rep;
}

Rational group_law(const Rational& a, const Rational& b, const Rational& tau) {
  if ((Rational(1) + tau * a).is_zero()) throw NotAPoint(a.str() + " is not a point of G at t = " + tau.str());
  if ((Rational(1) + tau * b).is_zero()) throw NotAPoint(b.str() + " is not a point of G at t = " + tau.str());
  return a + b + tau * a * b;
}

Rational group_inverse(const Rational& a, const Rational& tau) {
  Rational u = Rational(1) + tau * a;
  if (u.is_zero()) throw NotAPoint(a.str() + " is not a point of G at t = " + tau.str());
  return -a / u;
}

IntPoly interpolating_action() {
  // alpha(a, x) = x + a + t a x
  return int_x(2) + int_x(1) + int_t() * int_x(1) * int_x(2);
}

HopfReport action_derivative_check(const IntPoly& action, bool at_t_zero) {
  const L alpha(action);
  HopfReport rep;
  rep.rows.push_back(evaluate("derivative", [&] {
    L d(action.derivative(1));
    L at_identity = in_slots(d, L::constant(0), x2());
    return at_identity - (one() + t() * x2());
  }, at_t_zero));
  rep.rows.push_back(evaluate("compatibility", [&] {
    // alpha(a, alpha(b, x)) with a = x1, b = x2, x = x3
    L inner = in_slots(alpha, x2(), x3());
    L outer = in_slots(alpha, x1(), inner);
    L ab = x1() + x2() + t() * x1() * x2();
    L rhs = in_slots(alpha, ab, x3());
    return outer - rhs;
  }, at_t_zero));
  return rep;
}

}  // namespace nvf
