#include "nodalvf/bubble.hpp"

#include <algorithm>

#include "nodalvf/error.hpp"

namespace nvf {

namespace {

void require(const Diagnostics& d, const std::string& what) {
  if (!d.pass()) throw PreconditionFailed(what + ": " + d.str());
}

void ensure(const Diagnostics& d, const std::string& what) {
  if (!d.pass()) throw InvariantViolation(what + ": " + d.str());
}

BubbleResult unchanged(const MarkedCurve& c, const Place& x) {
  return {c, x, ContractionMap{true, -1, x}};
}

}  // namespace

BubbleResult knudsen_stabilize(const MarkedCurve& c, const Place& x) {
  require(category_check(c, CurveKind::C1, x), "knudsen_stabilize needs a C1 curve");

  MarkedCurve out = c;
  const int e = c.next_id();
  const Place new_x{e, ChartPoint(1)};

  if (auto ni = c.node_at(x)) {
    const Node n = c.nodes[*ni];
    const Place& a = n.a == x ? n.a : n.b;
    const Place& b = n.a == x ? n.b : n.a;
    Rational w = c.field(a.comp).weight_at(a.at);
    out.components.push_back({e, FieldTriple{Rational(0), w, Rational(0)}});
    out.nodes.erase(out.nodes.begin() + static_cast<std::ptrdiff_t>(*ni));
    out.nodes.push_back({a, Place{e, ChartPoint::infinity()}});
    out.nodes.push_back({b, Place{e, ChartPoint(0)}});
  } else if (x == c.p_infty) {
    Rational w = c.field(x.comp).weight_at(x.at);
    out.components.push_back({e, FieldTriple{Rational(0), w, Rational(0)}});
    out.nodes.push_back({x, Place{e, ChartPoint::infinity()}});
    out.p_infty = Place{e, ChartPoint(0)};
  } else {
    return unchanged(c, x);
  }
  ensure(category_check(out, CurveKind::C2, new_x), "knudsen_stabilize output");
  return {std::move(out), new_x, ContractionMap{false, e, x}};
}

BubbleResult inflate_at_zero(const MarkedCurve& c, const Place& x) {
  require(category_check(c, CurveKind::C2, x), "inflate_at_zero needs a C2 curve");
  const FieldTriple& f = c.field(x.comp);
  if (!f.vanishes_at(x.at)) return unchanged(c, x);

  MarkedCurve out = c;
  const int e = c.next_id();
  const Place new_x{e, ChartPoint(0)};
  Rational w = f.weight_at(x.at);
  out.components.push_back({e, FieldTriple{Rational(1), w, Rational(0)}});
  out.nodes.push_back({x, Place{e, ChartPoint::infinity()}});
  ensure(category_check(out, CurveKind::C3, new_x), "inflate_at_zero output");
  return {std::move(out), new_x, ContractionMap{false, e, x}};
}

BubbleResult bubble_down(const MarkedCurve& c, CurveKind kind, const Place& x) {
  if (kind != CurveKind::C2 && kind != CurveKind::C3)
    throw KindMismatch("bubble_down applies to C2 or C3, got " + to_string(kind));
  if (c.markings.empty()) throw PreconditionFailed("bubble_down needs at least one marking");
  require(category_check(c, kind, x), "bubble_down needs a " + to_string(kind) + " curve");

  const int x_weight = kind == CurveKind::C2 ? 0 : 1;
  std::vector<int> flat;
  for (const auto& comp : c.components)
    if (twisted_degree(c, comp.id, x_weight, x) == 0) flat.push_back(comp.id);
  if (flat.empty()) return unchanged(c, x);
  if (flat.size() > 1)
    throw NonUniqueContraction(std::to_string(flat.size()) + " components of twisted degree 0");

  const int s = flat.front();
  const auto br = c.branches(s);
  MarkedCurve out;
  for (const auto& comp : c.components)
    if (comp.id != s) out.components.push_back(comp);
  for (const auto& n : c.nodes)
    if (n.a.comp != s && n.b.comp != s) out.nodes.push_back(n);
  out.p_infty = c.p_infty;
  out.markings = c.markings;

  Place image;
  if (br.size() == 1) {
    image = br[0].second;
  } else if (br.size() == 2) {
    image = br[0].second;
    out.nodes.push_back({br[0].second, br[1].second});
  } else {
    throw InvariantViolation("component of twisted degree 0 meets " + std::to_string(br.size()) +
                             " others");
  }
  auto land = [&](Place& p) {
    if (p.comp == s) p = image;
  };
  land(out.p_infty);
  for (auto& m : out.markings) land(m);
  Place new_x = x;
  land(new_x);

  CurveKind lower = kind == CurveKind::C2 ? CurveKind::C1 : CurveKind::C2;
  ensure(category_check(out, lower, new_x), "bubble_down output");
  return {std::move(out), new_x, ContractionMap{false, s, image}};
}

}  // namespace nvf
