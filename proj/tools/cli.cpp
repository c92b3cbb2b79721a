#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "nodalvf/bubble.hpp"
#include "nodalvf/error.hpp"
#include "nodalvf/hopf.hpp"
#include "nodalvf/json_io.hpp"
#include "nodalvf/limits.hpp"
#include "nodalvf/strata.hpp"

namespace nvf::cli {

namespace {

using nlohmann::json;
namespace io = nvf::json;

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::string pretty(const json& j) { return j.dump(2) + "\n"; }

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

int print_report(const HopfReport& rep, std::ostream& out) {
  for (const auto& r : rep.rows) {
    out << std::left << std::setw(16) << r.name << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) out << "  " << r.message;
    out << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int print_diagnostics(const Diagnostics& d, bool as_json, std::ostream& out) {
  if (as_json) out << pretty(io::to_json(d));
  else out << d.str() << "\n";
  return d.pass() ? 0 : 1;
}

HopfPresentation presentation(const std::string& mutant) {
  HopfPresentation h = HopfPresentation::interpolating();
  using L = LocalizedElement;
  if (mutant.empty() || mutant == "none") return h;
  if (mutant == "drop-t") h.comult = L::x(1) + L::x(2);
  else if (mutant == "naive-antipode") h.antipode = -L::x(1);
  else if (mutant == "shifted-counit") h.counit = L::constant(1);
  else throw ParseError("unknown mutant '" + mutant + "' (drop-t, naive-antipode, shifted-counit)");
  return h;
}

struct Figure3Entry {
  int column;
  LMType lm;
  std::vector<std::string> maximal;
};

std::vector<Figure3Entry> load_figure3(const std::string& dir) {
  json j = read_json(dir + "/figure3.json");
  std::vector<Figure3Entry> out;
  for (const auto& e : j.at("entries")) {
    Figure3Entry f{e.at("column").get<int>(), LMType::parse(e.at("lm").get<std::string>()), {}};
    for (const auto& k : e.at("maximal")) f.maximal.push_back(PnType::parse(k.get<std::string>()).key());
    std::sort(f.maximal.begin(), f.maximal.end());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with nodal curves carrying vector fields", "nodalvf"};
  app.require_subcommand(1);
  std::function<int()> action;

  // hopf
  auto* hopf = app.add_subcommand("hopf", "Interpolating group scheme between G_m and G_a");
  hopf->require_subcommand(1);
  std::string mutant;
  auto* hverify = hopf->add_subcommand("verify", "Check the Hopf axioms on the generator");
  hverify->add_option("--mutant", mutant, "drop-t | naive-antipode | shifted-counit");
  hverify->callback([&] { action = [&] { return print_report(hopf_verify_axioms(presentation(mutant)), out); }; });
  bool at_zero = false;
  auto* hiso = hopf->add_subcommand("iso", "Check that y = 1 + t x is grouplike");
  hiso->add_option("--mutant", mutant);
  hiso->add_flag("--at-zero", at_zero, "Specialize residuals to t = 0");
  hiso->callback([&] { action = [&] { return print_report(hopf_check_iso_to_gm(presentation(mutant), at_zero), out); }; });
  auto* haction = hopf->add_subcommand("action", "Check the action x + a + t a x");
  haction->add_flag("--at-zero", at_zero);
  haction->callback([&] { action = [&] { return print_report(action_derivative_check(interpolating_action(), at_zero), out); }; });
  std::string la, lb, ltau = "1";
  bool inverse = false;
  auto* hlaw = hopf->add_subcommand("law", "Group law a + b + tau a b on points");
  hlaw->add_option("--a", la, "p/q")->required();
  hlaw->add_option("--b", lb, "p/q");
  hlaw->add_option("--tau", ltau, "p/q");
  hlaw->add_flag("--inverse", inverse, "Print the inverse of a instead");
  hlaw->callback([&] {
    action = [&] {
      Rational a = Rational::parse(la), tau = Rational::parse(ltau);
      if (inverse) {
        out << group_inverse(a, tau).str() << "\n";
      } else {
        if (lb.empty()) throw ParseError("--b is required unless --inverse is given");
        out << group_law(a, Rational::parse(lb), tau).str() << "\n";
      }
      return 0;
    };
  });

  // curve
  auto* curve = app.add_subcommand("curve", "Operations on one marked curve");
  curve->require_subcommand(1);
  std::string in, other, xs, other_x, kind = "V", shifts, out_path;
  bool as_json = false, dot = false;
  auto load = [&] { return io::curve_from(read_json(in)); };
  auto add_in = [&](CLI::App* c) { c->add_option("--in", in, "Curve JSON file ('-' for stdin)")->required(); };

  auto* cvalidate = curve->add_subcommand("validate", "Structural invariants");
  add_in(cvalidate);
  cvalidate->add_flag("--json", as_json);
  cvalidate->add_flag("--dot", dot, "Print the dual tree in DOT");
  cvalidate->callback([&] {
    action = [&] {
      MarkedCurve c = load();
      if (dot) out << curve_to_dot(c);
      return print_diagnostics(validate_curve(c), as_json, out);
    };
  });
  auto* cncr = curve->add_subcommand("ncr", "Negative coresidue at p_infty");
  add_in(cncr);
  cncr->callback([&] { action = [&] { out << ncr(load()).str() << "\n"; return 0; }; });

  auto* ccheck = curve->add_subcommand("check", "Category membership (V, C1, C2, C3) or Pn stability");
  add_in(ccheck);
  ccheck->add_option("--kind", kind, "V | C1 | C2 | C3 | Pn");
  ccheck->add_option("--x", xs, "Extra section comp:point");
  ccheck->add_flag("--json", as_json);
  ccheck->callback([&] {
    action = [&] {
      MarkedCurve c = load();
      if (kind == "Pn") return print_diagnostics(pn_object_check(c), as_json, out);
      std::optional<Place> x;
      if (!xs.empty()) x = io::place_from_string(xs);
      return print_diagnostics(category_check(c, curve_kind_from_string(kind), x), as_json, out);
    };
  });

  auto bubble_cmd = [&](const char* name, const char* help, std::function<BubbleResult(const MarkedCurve&, const Place&)> op) {
    auto* c = curve->add_subcommand(name, help);
    add_in(c);
    c->add_option("--x", xs, "Point comp:point")->required();
    c->add_option("--out", out_path);
    c->add_option("--kind", kind, "C2 | C3 (contract only)");
    c->callback([&, op] {
      action = [&, op] {
        BubbleResult r = op(load(), io::place_from_string(xs));
        write_text(out_path, pretty(io::to_json(r)), out);
        return 0;
      };
    });
  };
  bubble_cmd("stabilize", "Knudsen stabilization at x", knudsen_stabilize);
  bubble_cmd("inflate", "Inflate at a zero of the field", inflate_at_zero);
  bubble_cmd("contract", "Contract the component of twisted degree 0", [&](const MarkedCurve& c, const Place& x) {
    return bubble_down(c, curve_kind_from_string(kind == "V" ? "C2" : kind), x);
  });

  auto* cact = curve->add_subcommand("act", "Flow each marking along its field");
  add_in(cact);
  cact->add_option("--shifts", shifts, "Comma separated rationals, one per marking")->required();
  cact->add_option("--out", out_path);
  cact->callback([&] {
    action = [&] {
      MarkedCurve c = gan_act(load(), parse_rationals(shifts));
      write_text(out_path, pretty(io::to_json(c)), out);
      return 0;
    };
  });

  auto* ciso = curve->add_subcommand("iso", "Decide isomorphism with another curve");
  add_in(ciso);
  ciso->add_option("--other", other, "Second curve JSON")->required();
  ciso->add_option("--x", xs, "Extra section on the first curve");
  ciso->add_option("--other-x", other_x, "Extra section on the second curve");
  ciso->callback([&] {
    action = [&] {
      std::optional<Place> xa, xb;
      if (!xs.empty()) xa = io::place_from_string(xs);
      if (!other_x.empty()) xb = io::place_from_string(other_x);
      auto iso = curve_isomorphic(load(), io::curve_from(read_json(other)), xa, xb);
      if (!iso) {
        out << pretty(json{{"isomorphic", false}});
        return 1;
      }
      out << pretty(io::to_json(*iso));
      return 0;
    };
  });

  // strata
  auto* strata = app.add_subcommand("strata", "Stratum types of the Losev-Manin and translation-side spaces");
  std::string family = "lm";
  int n = 3;
  bool count = false, list = false, dims = false, poset = false;
  strata->add_option("--family", family, "lm | pn")->check(CLI::IsMember({"lm", "pn"}));
  strata->add_option("--n", n, "Number of markings");
  strata->add_flag("--count", count);
  strata->add_flag("--list", list);
  strata->add_flag("--dims", dims);
  strata->add_flag("--poset", poset);
  strata->add_flag("--json", as_json);
  strata->add_flag("--dot", dot, "Poset as DOT");
  strata->callback([&] {
    action = [&] {
      std::vector<std::string> keys;
      std::vector<int> dim;
      std::vector<std::pair<std::size_t, std::size_t>> covers;
      if (family == "lm") {
        auto ts = lm_types(n);
        for (const auto& t : ts) keys.push_back(t.key()), dim.push_back(stratum_dim(t));
        if (poset) covers = closure_covers(ts);
      } else {
        auto ts = pn_types(n);
        for (const auto& t : ts) keys.push_back(t.key()), dim.push_back(stratum_dim(t));
        if (poset) covers = closure_covers(ts);
      }
      if (!count && !list && !dims && !poset) count = true;
      std::vector<long> hist(n, 0);
      for (int d : dim) ++hist[d];
      if (as_json) {
        json j;
        if (count) j["count"] = keys.size();
        if (dims) j["dims"] = hist;
        if (list) {
          j["types"] = json::array();
          for (std::size_t i = 0; i < keys.size(); ++i) j["types"].push_back({{"key", keys[i]}, {"dim", dim[i]}});
        }
        if (poset) {
          j["covers"] = json::array();
          for (const auto& [a, b] : covers) j["covers"].push_back(json::array({keys[a], keys[b]}));
        }
        out << pretty(j);
        return 0;
      }
      if (count) out << keys.size() << "\n";
      if (dims)
        for (int d = 0; d < n; ++d) out << "dim " << d << ": " << hist[d] << "\n";
      if (list)
        for (std::size_t i = 0; i < keys.size(); ++i) out << keys[i] << "  dim " << dim[i] << "\n";
      if (poset) {
        if (dot) out << poset_dot(keys, covers);
        else
          for (const auto& [a, b] : covers) out << keys[a] << " < " << keys[b] << "\n";
      }
      return 0;
    };
  });

  // limit
  auto* limit = app.add_subcommand("limit", "Stable limit of a path family");
  std::string mode, center = "recenter";
  limit->add_option("--in", in, "Path family JSON")->required();
  limit->add_option("--mode", mode, "affine | degeneration");
  limit->add_option("--center", center, "recenter | first")->check(CLI::IsMember({"recenter", "first"}));
  limit->add_option("--out", out_path, "Write the curve JSON here");
  limit->add_flag("--dot", dot);
  limit->callback([&] {
    action = [&] {
      std::optional<LimitMode> m;
      if (!mode.empty()) m = limit_mode_from_string(mode);
      PathFamily f = io::family_from(read_json(in), m);
      MarkedCurve c = stable_limit(f, center == "first" ? CenterRule::FirstMarking : CenterRule::Recenter);
      std::string type = type_of_curve(c).key();
      if (dot) out << curve_to_dot(c);
      if (out_path.empty()) {
        out << pretty(json{{"type", type}, {"curve", io::to_json(c)}});
      } else {
        write_text(out_path, pretty(io::to_json(c)), out);
        out << "type " << type << "\n";
      }
      return 0;
    };
  });

  // specialize
  auto* spec = app.add_subcommand("specialize", "Strata reached by t -> 0 limits of a Losev-Manin stratum");
  std::vector<std::string> lms;
  std::string grid = "default", report = "table";
  unsigned jobs = 1;
  spec->add_option("--n", n, "Number of markings");
  spec->add_option("--lm", lms, "Stratum such as 12|3 (repeatable; default all)");
  spec->add_option("--grid", grid, "default, or a=..;b=..;c=..;min=..");
  spec->add_option("--report", report, "table | json")->check(CLI::IsMember({"table", "json"}));
  spec->add_option("--jobs", jobs, "Worker threads");
  spec->callback([&] {
    action = [&] {
      SampleGrid g = SampleGrid::parse(grid);
      std::vector<LMType> types;
      if (lms.empty()) types = lm_types(n);
      for (const auto& s : lms) types.push_back(LMType::parse(s));
      json reports = json::array();
      for (const auto& t : types) {
        SpecializationReport r = specialize_lm(t, g, jobs);
        if (report == "json") {
          reports.push_back(io::to_json(r));
          continue;
        }
        out << "LM " << r.source.key() << "  samples " << r.samples << "\n  maximal:";
        for (const auto& k : r.maximal) out << " " << k;
        out << "\n  collected:";
        for (const auto& [k, c] : r.collected) out << " " << k << " (" << c << ")";
        out << "\n";
      }
      if (report == "json") out << pretty(reports);
      return 0;
    };
  });

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Golden fixtures");
  fixtures->require_subcommand(1);
  auto* replay = fixtures->add_subcommand("replay", "Replay a fixture set");
  std::string which, dir = NODALVF_FIXTURE_DIR;
  replay->add_option("name", which, "figure3")->required()->check(CLI::IsMember({"figure3"}));
  replay->add_option("--dir", dir, "Fixture directory");
  replay->add_option("--jobs", jobs);
  replay->callback([&] {
    action = [&] {
      auto entries = load_figure3(dir);
      std::map<int, std::pair<int, int>> columns;  // column -> (matches, entries)
      SampleGrid g = SampleGrid::default_grid();
      for (const auto& e : entries) {
        SpecializationReport r = specialize_lm(e.lm, g, jobs);
        std::vector<PnType> sigma;
        for (const auto& k : e.maximal) sigma.push_back(PnType::parse(k));
        bool covered = true;
        for (const auto& [k, c] : r.collected) {
          PnType t = PnType::parse(k);
          covered = covered && std::any_of(sigma.begin(), sigma.end(),
                                           [&](const PnType& s) { return closure_leq(t, s); });
        }
        bool ok = r.maximal == e.maximal && covered;
        auto& col = columns[e.column];
        col.first += ok;
        col.second += 1;
        out << "column " << e.column << "  " << std::left << std::setw(6) << e.lm.key() << " "
            << (ok ? "MATCH" : "MISMATCH");
        for (const auto& k : r.maximal) out << " " << k;
        if (!ok) {
          out << "  expected";
          for (const auto& k : e.maximal) out << " " << k;
        }
        out << "\n";
      }
      bool all = true;
      for (const auto& [c, mt] : columns) {
        bool ok = mt.first == mt.second;
        all = all && ok;
        out << "column " << c << ": " << (ok ? "MATCH" : "MISMATCH") << " (" << mt.first << "/" << mt.second
            << " relabelings)\n";
      }
      return all ? 0 : 1;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }
  if (!action) {
    err << app.help();
    return 1;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.severity() == Error::Severity::Invariant ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nvf::cli
