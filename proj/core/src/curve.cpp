#include "nodalvf/curve.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "nodalvf/error.hpp"

namespace nvf {

const Component* MarkedCurve::find(int id) const {
  for (const auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

Component* MarkedCurve::find(int id) {
  for (auto& c : components)
    if (c.id == id) return &c;
  return nullptr;
}

const Component& MarkedCurve::component(int id) const {
  const Component* c = find(id);
  if (!c) throw std::out_of_range("no component with id " + std::to_string(id));
  return *c;
}

std::vector<std::pair<ChartPoint, Place>> MarkedCurve::branches(int id) const {
  std::vector<std::pair<ChartPoint, Place>> out;
  for (const auto& n : nodes) {
    if (n.a.comp == id) out.emplace_back(n.a.at, n.b);
    if (n.b.comp == id) out.emplace_back(n.b.at, n.a);
  }
  return out;
}

std::optional<std::size_t> MarkedCurve::node_at(const Place& p) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].a == p || nodes[i].b == p) return i;
  return std::nullopt;
}

int MarkedCurve::next_id() const {
  int m = -1;
  for (const auto& c : components) m = std::max(m, c.id);
  return m + 1;
}

std::string to_string(CurveKind k) {
  switch (k) {
    case CurveKind::V: return "V";
    case CurveKind::C1: return "C1";
    case CurveKind::C2: return "C2";
    case CurveKind::C3: return "C3";
  }
  return "?";
}

CurveKind curve_kind_from_string(const std::string& s) {
  if (s == "V") return CurveKind::V;
  if (s == "C1") return CurveKind::C1;
  if (s == "C2") return CurveKind::C2;
  if (s == "C3") return CurveKind::C3;
  throw ParseError("unknown curve kind '" + s + "' (expected V, C1, C2 or C3)");
}

namespace {

std::string marking_name(std::size_t j) { return "x" + std::to_string(j + 1); }

bool references_ok(const MarkedCurve& c, const Place& p) { return c.find(p.comp) != nullptr; }

}  // namespace

Diagnostics validate_curve(const MarkedCurve& c) {
  Diagnostics d;
  if (c.components.empty()) {
    d.fail("components", "curve", "no components");
    return d;
  }
  std::set<int> ids;
  for (const auto& comp : c.components)
    if (!ids.insert(comp.id).second) d.fail("components", "C" + std::to_string(comp.id), "duplicate id");

  bool refs = true;
  auto check_ref = [&](const Place& p, const std::string& what) {
    if (!references_ok(c, p)) {
      d.fail("reference", what, "unknown component " + std::to_string(p.comp));
      refs = false;
    }
  };
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    check_ref(c.nodes[i].a, "node " + std::to_string(i));
    check_ref(c.nodes[i].b, "node " + std::to_string(i));
  }
  check_ref(c.p_infty, "p_infty");
  for (std::size_t j = 0; j < c.markings.size(); ++j) check_ref(c.markings[j], marking_name(j));
  if (!refs || !d.pass()) return d;

  // Tree: |E| = |V| - 1 and no cycle (union-find).
  std::map<int, int> parent;
  for (int id : ids) parent[id] = id;
  std::function<int(int)> root = [&](int v) { return parent[v] == v ? v : parent[v] = root(parent[v]); };
  bool cycle = false;
  for (const auto& n : c.nodes) {
    int ra = root(n.a.comp), rb = root(n.b.comp);
    if (ra == rb) cycle = true;
    else parent[ra] = rb;
  }
  if (cycle || c.nodes.size() + 1 != c.components.size())
    d.fail("tree", "dual graph", "dual graph is not a tree (components " +
                                     std::to_string(c.components.size()) + ", nodes " +
                                     std::to_string(c.nodes.size()) + (cycle ? ", cycle" : "") + ")");

  // Distinctness of special points.
  for (const auto& comp : c.components) {
    auto br = c.branches(comp.id);
    for (std::size_t i = 0; i < br.size(); ++i)
      for (std::size_t k = i + 1; k < br.size(); ++k)
        if (br[i].first == br[k].first)
          d.fail("distinct", "C" + std::to_string(comp.id) + " at " + br[i].first.str(),
                 "two nodes at the same point");
  }
  if (c.is_node_point(c.p_infty)) d.fail("distinct", "p_infty", "p_infty lies on a node");
  for (std::size_t j = 0; j < c.markings.size(); ++j) {
    if (c.is_node_point(c.markings[j])) d.fail("distinct", marking_name(j), "marking lies on a node");
    if (c.markings[j] == c.p_infty) d.fail("distinct", marking_name(j), "marking coincides with p_infty");
  }

  // Field along nodes.
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const Node& n = c.nodes[i];
    const FieldTriple& fa = c.field(n.a.comp);
    const FieldTriple& fb = c.field(n.b.comp);
    bool va = fa.vanishes_at(n.a.at), vb = fb.vanishes_at(n.b.at);
    if (!va) d.fail("node_vanishing", n.a.str(), "field does not vanish at node point");
    if (!vb) d.fail("node_vanishing", n.b.str(), "field does not vanish at node point");
    if (va && vb) {
      Rational wa = fa.weight_at(n.a.at), wb = fb.weight_at(n.b.at);
      if (!(wa + wb).is_zero())
        d.fail("weight_matching", "node " + std::to_string(i),
               "weights " + wa.str() + " + " + wb.str() + " != 0");
    }
  }
  return d;
}

Rational field_value(const MarkedCurve& c, const Place& at) {
  if (c.is_node_point(at)) throw SingularPoint(at.str() + " is a node");
  return c.field(at.comp).value_at(at.at);
}

Rational ncr(const MarkedCurve& c) {
  const FieldTriple& f = c.field(c.p_infty.comp);
  if (!f.vanishes_at(c.p_infty.at))
    throw FieldNotVanishing("field value " + f.value_at(c.p_infty.at).str() + " at p_infty");
  return -f.weight_at(c.p_infty.at);
}

int twisted_degree(const MarkedCurve& c, int comp, int x_weight, const std::optional<Place>& x) {
  int deg = static_cast<int>(c.branches(comp).size()) - 2;
  if (c.p_infty.comp == comp) deg += 1;
  for (const auto& m : c.markings)
    if (m.comp == comp) deg += 2;
  if (x && x->comp == comp) deg += x_weight;
  return deg;
}

Diagnostics category_check(const MarkedCurve& c, CurveKind kind, const std::optional<Place>& extra) {
  Diagnostics d = validate_curve(c);
  if (!d.pass()) return d;

  if (!c.field(c.p_infty.comp).vanishes_at(c.p_infty.at))
    d.fail("p_infty_vanishing", "p_infty", "field does not vanish at p_infty");
  for (std::size_t j = 0; j < c.markings.size(); ++j)
    if (c.field(c.markings[j].comp).vanishes_at(c.markings[j].at))
      d.fail("marking_nonvanishing", marking_name(j), "field vanishes at marking");

  int x_weight = 0;
  std::optional<Place> x;
  if (kind != CurveKind::V) {
    if (!extra) {
      d.fail("extra_section", "x", "kind " + to_string(kind) + " requires an extra section");
      return d;
    }
    if (!c.find(extra->comp)) {
      d.fail("reference", "x", "unknown component " + std::to_string(extra->comp));
      return d;
    }
    x = extra;
    x_weight = kind == CurveKind::C1 ? 0 : (kind == CurveKind::C2 ? 1 : 2);
    if (kind != CurveKind::C1) {
      if (c.is_node_point(*extra)) d.fail("extra_smooth", "x", "extra section lies on a node");
      if (*extra == c.p_infty) d.fail("extra_distinct", "x", "extra section coincides with p_infty");
    }
    if (kind == CurveKind::C3 && !c.is_node_point(*extra) &&
        c.field(extra->comp).vanishes_at(extra->at))
      d.fail("extra_nonvanishing", "x", "field vanishes at the extra section");
  }

  for (const auto& comp : c.components) {
    int deg = twisted_degree(c, comp.id, x_weight, x);
    if (deg <= 0)
      d.fail("ampleness", "C" + std::to_string(comp.id), "twisted degree " + std::to_string(deg) + " <= 0");
  }
  return d;
}

Diagnostics pn_object_check(const MarkedCurve& c) {
  Diagnostics d = validate_curve(c);
  if (!d.pass()) return d;

  const FieldTriple& fp = c.field(c.p_infty.comp);
  if (fp.order_at(c.p_infty.at) < 2) {
    std::string msg = fp.vanishes_at(c.p_infty.at)
                          ? "NCR is " + (-fp.weight_at(c.p_infty.at)).str() + ", not 0"
                          : "field does not vanish at p_infty";
    d.fail("double_zero_at_p_infty", "p_infty", msg);
  }
  for (std::size_t j = 0; j < c.markings.size(); ++j)
    if (c.field(c.markings[j].comp).vanishes_at(c.markings[j].at))
      d.fail("marking_nonvanishing", marking_name(j), "field vanishes at marking");

  for (const auto& comp : c.components) {
    std::size_t deg = c.branches(comp.id).size();
    bool has_pinf = c.p_infty.comp == comp.id;
    bool has_marking = std::any_of(c.markings.begin(), c.markings.end(),
                                   [&](const Place& m) { return m.comp == comp.id; });
    std::string loc = "C" + std::to_string(comp.id);
    if (deg == 2 && !has_pinf) d.fail("stability_3a", loc, "meets exactly two other components");
    if (deg == 1 && (!has_marking || has_pinf))
      d.fail("stability_3b", loc,
             has_pinf ? "tail contains p_infty" : "tail carries no marking");
  }
  return d;
}

MarkedCurve change_chart(const MarkedCurve& c, int comp, const Mobius& g) {
  MarkedCurve out = c;
  Component* target = out.find(comp);
  if (!target) throw std::out_of_range("no component with id " + std::to_string(comp));
  target->field = g.push(target->field);
  auto move = [&](Place& p) {
    if (p.comp == comp) p.at = g.apply(p.at);
  };
  for (auto& n : out.nodes) {
    move(n.a);
    move(n.b);
  }
  move(out.p_infty);
  for (auto& m : out.markings) move(m);
  return out;
}

MarkedCurve relabel_components(const MarkedCurve& c, const std::map<int, int>& ids) {
  MarkedCurve out = c;
  auto map_id = [&](int id) {
    auto it = ids.find(id);
    if (it == ids.end()) throw std::out_of_range("relabel map misses component " + std::to_string(id));
    return it->second;
  };
  for (auto& comp : out.components) comp.id = map_id(comp.id);
  for (auto& n : out.nodes) {
    n.a.comp = map_id(n.a.comp);
    n.b.comp = map_id(n.b.comp);
  }
  out.p_infty.comp = map_id(out.p_infty.comp);
  for (auto& m : out.markings) m.comp = map_id(m.comp);
  return out;
}

ChartPoint flow(const FieldTriple& f, const ChartPoint& start, const Rational& time) {
  if (f.vanishes_at(start)) return start;
  if (f.p1.is_zero() && f.p2.is_zero()) return ChartPoint(start.value() + f.p0 * time);
  if (!f.discriminant().is_zero())
    throw PreconditionFailed("field " + f.str() + " has two distinct zeros; its flow is not a translation");
  // Double zero at nu; w = 1/(x - nu) straightens the field to a constant.
  ChartPoint nu(-f.p1 / (Rational(2) * f.p2));
  Mobius g = Mobius::normalizing_point(nu);
  FieldTriple straight = g.push(f);
  ChartPoint w = g.apply(start);
  return g.inverse().apply(ChartPoint(w.value() + straight.p0 * time));
}

MarkedCurve gan_act(const MarkedCurve& c, const std::vector<Rational>& shifts) {
  Diagnostics d = pn_object_check(c);
  if (!d.pass()) throw PreconditionFailed("gan_act needs an object with vanishing NCR: " + d.str());
  if (shifts.size() != c.markings.size())
    throw PreconditionFailed("expected " + std::to_string(c.markings.size()) + " shifts, got " +
                             std::to_string(shifts.size()));
  MarkedCurve out = c;
  for (std::size_t j = 0; j < out.markings.size(); ++j) {
    Place& m = out.markings[j];
    const FieldTriple& f = c.field(m.comp);
    if (f.vanishes_at(m.at)) throw FieldZeroAtMarking(marking_name(j));
    m.at = flow(f, m.at, shifts[j]);
  }
  return out;
}

std::string curve_to_dot(const MarkedCurve& c) {
  std::ostringstream os;
  os << "graph curve {\n  node [shape=box];\n";
  for (const auto& comp : c.components) {
    os << "  C" << comp.id << " [label=\"C" << comp.id << "\\nfield " << comp.field.str();
    if (c.p_infty.comp == comp.id) os << "\\np_inf @ " << c.p_infty.at.str();
    for (std::size_t j = 0; j < c.markings.size(); ++j)
      if (c.markings[j].comp == comp.id) os << "\\n" << marking_name(j) << " @ " << c.markings[j].at.str();
    os << "\"];\n";
  }
  for (const auto& n : c.nodes)
    os << "  C" << n.a.comp << " -- C" << n.b.comp << " [label=\"" << n.a.at.str() << " ~ " << n.b.at.str()
       << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace nvf
