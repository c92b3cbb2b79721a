#include "nodalvf/json_io.hpp"

#include "nodalvf/error.hpp"

namespace nvf::json {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_from(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Rational& q) { return q.str(); }

Rational rational_from(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string, got " + j.dump());
}

json to_json(const ChartPoint& p) { return p.str(); }

ChartPoint point_from(const json& j) {
  if (j.is_string()) return ChartPoint::parse(j.get<std::string>());
  return ChartPoint(rational_from(j));
}

json to_json(const Place& p) { return {{"comp", p.comp}, {"at", to_json(p.at)}}; }

Place place_from(const json& j) {
  return Place{int_from(field(j, "comp"), "comp"), point_from(field(j, "at"))};
}

Place place_from_string(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw ParseError("place '" + s + "' must read comp:point");
  int comp = 0;
  try {
    std::size_t used = 0;
    comp = std::stoi(s.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw ParseError("bad component id in '" + s + "'");
  }
  return Place{comp, ChartPoint::parse(s.substr(colon + 1))};
}

json to_json(const FieldTriple& f) { return json::array({to_json(f.p0), to_json(f.p1), to_json(f.p2)}); }

FieldTriple field_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("field must be an array of three rationals");
  return {rational_from(j[0]), rational_from(j[1]), rational_from(j[2])};
}

json to_json(const MarkedCurve& c) {
  json comps = json::array(), nodes = json::array(), marks = json::array();
  for (const auto& comp : c.components) comps.push_back({{"id", comp.id}, {"field", to_json(comp.field)}});
  for (const auto& n : c.nodes) nodes.push_back(json::array({to_json(n.a), to_json(n.b)}));
  for (const auto& m : c.markings) marks.push_back(to_json(m));
  return {{"components", comps}, {"nodes", nodes}, {"p_infty", to_json(c.p_infty)}, {"markings", marks}};
}

MarkedCurve curve_from(const json& j) {
  MarkedCurve c;
  for (const auto& comp : field(j, "components"))
    c.components.push_back({int_from(field(comp, "id"), "id"), field_from(field(comp, "field"))});
  if (j.contains("nodes"))
    for (const auto& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 2) throw ParseError("a node is a pair of places");
      c.nodes.push_back({place_from(n[0]), place_from(n[1])});
    }
  c.p_infty = place_from(field(j, "p_infty"));
  if (j.contains("markings"))
    for (const auto& m : j.at("markings")) c.markings.push_back(place_from(m));
  return c;
}

json to_json(const ScalePath& p) {
  json terms = json::array();
  for (const auto& [e, q] : p.poly().terms()) {
    json exp = json::array();
    for (std::size_t i = 0; i < p.rank(); ++i) exp.push_back(e[i]);
    terms.push_back({{"exp", exp}, {"coeff", to_json(q)}});
  }
  return {{"params", p.params()}, {"terms", terms}};
}

namespace {

ScalePath path_with(const ScalePath::Params& params, const json& j) {
  std::vector<SparsePoly<Rational>::Term> terms;
  if (j.contains("terms"))
    for (const auto& t : j.at("terms")) {
      const json& exp = field(t, "exp");
      if (!exp.is_array() || exp.size() != params.size())
        throw NonPolynomialInput("exponent " + exp.dump() + " does not match " + std::to_string(params.size()) +
                                 " parameters");
      Exponent e;
      for (std::size_t i = 0; i < params.size(); ++i) e[i] = int_from(exp[i], "exponent");
      terms.emplace_back(e, rational_from(field(t, "coeff")));
    }
  return ScalePath(params, SparsePoly<Rational>::from_terms(params.size(), std::move(terms)));
}

ScalePath::Params params_from(const json& j) {
  ScalePath::Params p;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError("parameter names must be strings");
    p.push_back(s.get<std::string>());
  }
  if (p.size() > kMaxVars) throw RankTooLarge("at most 4 parameters are supported");
  return p;
}

}  // namespace

ScalePath path_from(const json& j) { return path_with(params_from(field(j, "params")), j); }

PathFamily family_from(const json& j, std::optional<LimitMode> mode) {
  PathFamily f;
  if (mode) f.mode = *mode;
  else if (j.is_object() && j.contains("mode")) f.mode = limit_mode_from_string(j.at("mode").get<std::string>());
  std::optional<ScalePath::Params> shared;
  if (j.is_object() && j.contains("params")) shared = params_from(j.at("params"));
  const json& paths = j.is_array() ? j : field(j, "paths");
  for (const auto& p : paths) {
    if (p.contains("params")) f.paths.push_back(path_from(p));
    else if (shared) f.paths.push_back(path_with(*shared, p));
    else throw ParseError("path without parameters");
  }
  return f;
}

json to_json(const Diagnostics& d) {
  json fails = json::array();
  for (const auto& f : d.failures())
    fails.push_back({{"check", f.check}, {"location", f.location}, {"message", f.message}});
  return {{"pass", d.pass()}, {"failures", fails}};
}

json to_json(const Isomorphism& iso) {
  json comps = json::array();
  for (const auto& [a, b] : iso.components) {
    const Mobius& g = iso.charts.at(a);
    comps.push_back({{"from", a},
                     {"to", b},
                     {"chart", json::array({to_json(g.a()), to_json(g.b()), to_json(g.c()), to_json(g.d())})}});
  }
  return {{"isomorphic", true}, {"components", comps}};
}

json to_json(const ContractionMap& m) {
  if (m.identity) return {{"identity", true}};
  return {{"identity", false}, {"component", m.bubble_component}, {"image", to_json(m.image)}};
}

json to_json(const BubbleResult& r) {
  return {{"curve", to_json(r.curve)}, {"x", to_json(r.new_x)}, {"contraction", to_json(r.map)}};
}

json to_json(const SpecializationReport& r) {
  json collected = json::object();
  for (const auto& [k, v] : r.collected) collected[k] = v;
  return {{"lm", r.source.key()}, {"samples", r.samples}, {"collected", collected}, {"maximal", r.maximal}};
}

}  // namespace nvf::json
