#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nodalvf/chart.hpp"
#include "nodalvf/diagnostics.hpp"

namespace nvf {

// A point on a specific component, in that component's chart.
struct Place {
  int comp = 0;
  ChartPoint at;

  std::string str() const { return std::to_string(comp) + ":" + at.str(); }
  friend bool operator==(const Place&, const Place&) = default;
};

struct Component {
  int id = 0;
  FieldTriple field;
};

struct Node {
  Place a, b;
};

// Marked genus-0 nodal curve with a logarithmic vector field. Each component
// is a projective line with one global chart; nodes glue pairs of chart
// points; p_infty is the single marking where the field must vanish, and
// markings x_1..x_n are the points where it must not. Markings may coincide.
struct MarkedCurve {
  std::vector<Component> components;
  std::vector<Node> nodes;
  Place p_infty;
  std::vector<Place> markings;

  const Component* find(int id) const;
  Component* find(int id);
  const Component& component(int id) const;  // throws std::out_of_range
  const FieldTriple& field(int id) const { return component(id).field; }

  // Nodes with one branch on the given component, as (own point, other place).
  std::vector<std::pair<ChartPoint, Place>> branches(int id) const;
  std::optional<std::size_t> node_at(const Place& p) const;
  bool is_node_point(const Place& p) const { return node_at(p).has_value(); }

  int next_id() const;
};

enum class CurveKind { V, C1, C2, C3 };
std::string to_string(CurveKind k);
CurveKind curve_kind_from_string(const std::string& s);

// Structural invariants: tree shape, distinctness of special points, field
// vanishing at nodes and opposite weights across every node.
Diagnostics validate_curve(const MarkedCurve& c);

// Field value at a smooth point (p(v), or p2 at infinity). SingularPoint on a node.
Rational field_value(const MarkedCurve& c, const Place& at);

// Negated weight of the field at p_infty. FieldNotVanishing if the field is
// nonzero there.
Rational ncr(const MarkedCurve& c);

// Per-component twisted degree
//   (#nodes - 2) + [p_infty] + 2 #markings + w #[x]
// used by ampleness (w = 0, 1, 2 for C1, C2, C3) and by contraction.
int twisted_degree(const MarkedCurve& c, int comp, int x_weight, const std::optional<Place>& x);

Diagnostics category_check(const MarkedCurve& c, CurveKind kind,
                           const std::optional<Place>& extra = std::nullopt);

// Objects of the translation-side moduli problem: field vanishing to order 2
// at p_infty, nonvanishing at markings, and the stability conditions on the
// dual tree.
Diagnostics pn_object_check(const MarkedCurve& c);

// Applies a chart change on one component: every point on it is moved by g
// and its field is pushed forward.
MarkedCurve change_chart(const MarkedCurve& c, int comp, const Mobius& g);
// Renumbers components through a bijection old id -> new id.
MarkedCurve relabel_components(const MarkedCurve& c, const std::map<int, int>& ids);

struct Isomorphism {
  std::map<int, int> components;  // id in the first curve -> id in the second
  std::map<int, Mobius> charts;   // per component of the first curve
};

// Decides whether two curves are isomorphic as marked curves with fields:
// a tree isomorphism matching p_infty, marking indices and the optional
// extra sections, with a chart change on each component carrying special
// points and field.
std::optional<Isomorphism> curve_isomorphic(const MarkedCurve& a, const MarkedCurve& b,
                                            const std::optional<Place>& extra_a = std::nullopt,
                                            const std::optional<Place>& extra_b = std::nullopt);

// Flow of a field with a double zero (or a nonzero constant field) for the
// given time, starting at a point where it does not vanish.
ChartPoint flow(const FieldTriple& f, const ChartPoint& start, const Rational& time);

// Translation action on an object with vanishing NCR: marking j flows along
// its component's field for time shifts[j].
MarkedCurve gan_act(const MarkedCurve& c, const std::vector<Rational>& shifts);

// Dual tree in Graphviz format with p_infty and markings as labels.
std::string curve_to_dot(const MarkedCurve& c);

}  // namespace nvf
