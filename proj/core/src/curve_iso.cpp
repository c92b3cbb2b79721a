#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>

#include "nodalvf/curve.hpp"

namespace nvf {

namespace {

// Special points other than nodes. Node points are matched through the tree.
enum class LabelKind { PInfty, Marking, Extra };

struct Label {
  LabelKind kind;
  int index = 0;
};

struct Rooted {
  const MarkedCurve* curve;
  std::map<int, int> parent;                  // comp -> parent comp (root absent)
  std::map<int, ChartPoint> parent_point;     // point on comp towards parent
  std::map<int, std::vector<std::pair<ChartPoint, int>>> children;  // (own point, child comp)
  std::map<int, std::vector<std::pair<ChartPoint, Label>>> labels;  // fixed labels
  std::map<int, std::set<std::string>> below;  // descendant label names incl. own
};

std::string label_name(const Label& l) {
  switch (l.kind) {
    case LabelKind::PInfty: return "P";
    case LabelKind::Marking: return "M" + std::to_string(l.index);
    case LabelKind::Extra: return "X";
  }
  return "";
}

Rooted root_curve(const MarkedCurve& c, const std::optional<Place>& extra) {
  Rooted r;
  r.curve = &c;
  const int root = c.p_infty.comp;
  std::vector<int> order{root};
  std::set<int> seen{root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int u = order[i];
    r.children[u];
    for (const auto& [own, other] : c.branches(u)) {
      if (seen.count(other.comp)) continue;
      seen.insert(other.comp);
      r.parent[other.comp] = u;
      r.parent_point[other.comp] = other.at;
      r.children[u].emplace_back(own, other.comp);
      order.push_back(other.comp);
    }
  }
  r.labels[root].push_back({c.p_infty.at, {LabelKind::PInfty, 0}});
  for (std::size_t j = 0; j < c.markings.size(); ++j)
    r.labels[c.markings[j].comp].push_back({c.markings[j].at, {LabelKind::Marking, static_cast<int>(j)}});
  if (extra) {
    // A section through a node is recorded on the branch nearer the root.
    Place x = *extra;
    if (auto ni = c.node_at(x)) {
      const Node& n = c.nodes[*ni];
      const Place& other = n.a == x ? n.b : n.a;
      if (r.parent.count(x.comp) && r.parent.at(x.comp) == other.comp) x = other;
    }
    r.labels[x.comp].push_back({x.at, {LabelKind::Extra, 0}});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    auto& s = r.below[u];
    for (const auto& [pt, l] : r.labels[u]) s.insert(label_name(l));
    for (const auto& [pt, ch] : r.children[u]) s.insert(r.below[ch].begin(), r.below[ch].end());
  }
  return r;
}

std::optional<Rational> solve_scale(const FieldTriple& p, const FieldTriple& q) {
  // x -> l x sends (p0, p1, p2) to (l p0, p1, p2 / l).
  if (!p.p0.is_zero()) return q.p0 / p.p0;
  if (!p.p2.is_zero()) {
    if (q.p2.is_zero()) return std::nullopt;
    return p.p2 / q.p2;
  }
  return Rational(1);
}

std::optional<Mobius> solve_affine(const FieldTriple& p, const FieldTriple& q) {
  // y = l x + m: q2 = p2 / l, q1 = p1 - 2 p2 m / l, q0 = l p0 - p1 m + p2 m^2 / l.
  if (!p.p2.is_zero()) {
    if (q.p2.is_zero()) return std::nullopt;
    Rational l = p.p2 / q.p2;
    Rational m = (p.p1 - q.p1) * l / (Rational(2) * p.p2);
    return Mobius::affine(l, m);
  }
  if (!p.p1.is_zero()) return Mobius::affine(Rational(1), (p.p0 - q.p0) / p.p1);
  if (!p.p0.is_zero()) {
    if (q.p0.is_zero()) return std::nullopt;
    return Mobius::affine(q.p0 / p.p0, Rational(0));
  }
  return Mobius::identity();
}

// Finds a chart change g with g(src[i]) = dst[i] for all i and g_* f = h.
std::optional<Mobius> solve_local(const std::vector<std::pair<ChartPoint, ChartPoint>>& pairs,
                                  const FieldTriple& f, const FieldTriple& h) {
  // The correspondence must be a bijection between point sets.
  std::vector<std::pair<ChartPoint, ChartPoint>> uniq;
  for (const auto& pr : pairs) {
    bool dup = false;
    for (const auto& u : uniq) {
      bool s1 = u.first == pr.first, s2 = u.second == pr.second;
      if (s1 != s2) return std::nullopt;
      if (s1) dup = true;
    }
    if (!dup) uniq.push_back(pr);
  }
  std::optional<Mobius> g;
  if (uniq.size() >= 3) {
    std::array<ChartPoint, 3> p{uniq[0].first, uniq[1].first, uniq[2].first};
    std::array<ChartPoint, 3> q{uniq[0].second, uniq[1].second, uniq[2].second};
    g = Mobius::from_three(p, q);
  } else if (uniq.size() == 2) {
    Mobius ga = Mobius::normalizing_pair(uniq[0].first, uniq[1].first);
    Mobius gb = Mobius::normalizing_pair(uniq[0].second, uniq[1].second);
    auto l = solve_scale(ga.push(f), gb.push(h));
    if (!l || l->is_zero()) return std::nullopt;
    g = gb.inverse().after(Mobius::affine(*l, Rational(0))).after(ga);
  } else {
    Mobius ga = uniq.empty() ? Mobius::identity() : Mobius::normalizing_point(uniq[0].first);
    Mobius gb = uniq.empty() ? Mobius::identity() : Mobius::normalizing_point(uniq[0].second);
    auto a = solve_affine(ga.push(f), gb.push(h));
    if (!a) return std::nullopt;
    g = gb.inverse().after(*a).after(ga);
  }
  for (const auto& [p, q] : uniq)
    if (!(g->apply(p) == q)) return std::nullopt;
  if (!(g->push(f) == h)) return std::nullopt;
  return g;
}

class Matcher {
 public:
  Matcher(const Rooted& a, const Rooted& b) : a_(a), b_(b) {}

  bool match(int u, int v) {
    auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.has_value();
    memo_[key] = std::nullopt;
    auto res = solve(u, v);
    memo_[key] = res;
    return res.has_value();
  }

  void collect(int u, int v, Isomorphism& iso) const {
    const Local& loc = *memo_.at({u, v});
    iso.components[u] = v;
    iso.charts.emplace(u, loc.chart);
    const auto& ca = a_.children.at(u);
    const auto& cb = b_.children.at(v);
    for (std::size_t i = 0; i < ca.size(); ++i) collect(ca[i].second, cb[loc.child_map[i]].second, iso);
  }

 private:
  struct Local {
    Mobius chart;
    std::vector<std::size_t> child_map;
  };

  std::optional<Local> solve(int u, int v) {
    if (a_.below.at(u) != b_.below.at(v)) return std::nullopt;
    const auto& ca = a_.children.at(u);
    const auto& cb = b_.children.at(v);
    if (ca.size() != cb.size()) return std::nullopt;
    const auto& la = a_.labels.count(u) ? a_.labels.at(u) : empty_;
    const auto& lb = b_.labels.count(v) ? b_.labels.at(v) : empty_;
    if (la.size() != lb.size()) return std::nullopt;

    std::vector<std::pair<ChartPoint, ChartPoint>> fixed;
    for (const auto& [pa, l] : la) {
      auto it = std::find_if(lb.begin(), lb.end(), [&](const auto& e) {
        return e.second.kind == l.kind && e.second.index == l.index;
      });
      if (it == lb.end()) return std::nullopt;
      fixed.emplace_back(pa, it->first);
    }
    bool has_parent = a_.parent_point.count(u) > 0;
    if (has_parent != (b_.parent_point.count(v) > 0)) return std::nullopt;
    if (has_parent) fixed.emplace_back(a_.parent_point.at(u), b_.parent_point.at(v));

    const FieldTriple& f = a_.curve->field(u);
    const FieldTriple& h = b_.curve->field(v);
    std::vector<std::size_t> map(ca.size());
    std::vector<bool> used(cb.size(), false);
    std::optional<Local> found;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (found) return;
      if (i == ca.size()) {
        auto pairs = fixed;
        for (std::size_t k = 0; k < ca.size(); ++k) pairs.emplace_back(ca[k].first, cb[map[k]].first);
        if (auto g = solve_local(pairs, f, h)) found = Local{*g, map};
        return;
      }
      for (std::size_t j = 0; j < cb.size() && !found; ++j) {
        if (used[j] || !match(ca[i].second, cb[j].second)) continue;
        used[j] = true;
        map[i] = j;
        rec(i + 1);
        used[j] = false;
      }
    };
    rec(0);
    return found;
  }

  const Rooted& a_;
  const Rooted& b_;
  std::map<std::pair<int, int>, std::optional<Local>> memo_;
  const std::vector<std::pair<ChartPoint, Label>> empty_;
};

}  // namespace

std::optional<Isomorphism> curve_isomorphic(const MarkedCurve& a, const MarkedCurve& b,
                                            const std::optional<Place>& extra_a,
                                            const std::optional<Place>& extra_b) {
  if (a.components.size() != b.components.size() || a.nodes.size() != b.nodes.size() ||
      a.markings.size() != b.markings.size() || extra_a.has_value() != extra_b.has_value())
    return std::nullopt;
  if (!validate_curve(a).pass() || !validate_curve(b).pass()) return std::nullopt;
  Rooted ra = root_curve(a, extra_a);
  Rooted rb = root_curve(b, extra_b);
  Matcher m(ra, rb);
  if (!m.match(a.p_infty.comp, b.p_infty.comp)) return std::nullopt;
  Isomorphism iso;
  m.collect(a.p_infty.comp, b.p_infty.comp, iso);
  return iso;
}

}  // namespace nvf
