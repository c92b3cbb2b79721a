#include "nodalvf/limits.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "nodalvf/error.hpp"

namespace nvf {

std::string to_string(LimitMode m) { return m == LimitMode::Affine ? "affine" : "degeneration"; }

LimitMode limit_mode_from_string(const std::string& s) {
  if (s == "affine") return LimitMode::Affine;
  if (s == "degeneration") return LimitMode::Degeneration;
  throw ParseError("unknown mode '" + s + "' (expected affine or degeneration)");
}

namespace {

constexpr int kStepBudget = 100000;

using OptExp = std::optional<Exponent>;

// o >= e in the lex order, with nullopt standing for +infinity.
bool val_geq(const OptExp& a, const OptExp& b) {
  if (!a) return true;
  if (!b) return false;
  return *a >= *b;
}

struct Member {
  int index;
  ScalePath x;
  ScalePath z;  // x - center
};

class Builder {
 public:
  Builder(const PathFamily& f, CenterRule rule) : f_(f), rule_(rule) {
    params_ = f.paths.front().params();
    for (const auto& p : f.paths)
      if (p.params() != params_) throw ParamMismatch("marking paths over different parameters");
    if (f.mode == LimitMode::Degeneration) {
      auto it = std::find(params_.begin(), params_.end(), "t");
      if (params_.empty()) throw ParamMismatch("degeneration mode needs a parameter t");
      t_index_ = it == params_.end() ? params_.size() - 1 : static_cast<std::size_t>(it - params_.begin());
    }
    curve_.markings.resize(f.paths.size());
  }

  MarkedCurve run() {
    std::vector<Member> all;
    ScalePath zero(params_);
    for (std::size_t i = 0; i < f_.paths.size(); ++i) {
      if (f_.mode == LimitMode::Degeneration && field_factor(f_.paths[i]).is_zero())
        throw PreconditionFailed("1 + t x" + std::to_string(i + 1) + " vanishes identically");
      all.push_back({static_cast<int>(i), f_.paths[i], f_.paths[i]});
    }
    int root = rule_ == CenterRule::Recenter ? build_recenter(zero, std::move(all))
                                             : build_first(std::move(all));
    curve_.p_infty = Place{root, ChartPoint::infinity()};
    return std::move(curve_);
  }

 private:
  ScalePath field_factor(const ScalePath& c) const {
    ScalePath one = ScalePath::constant(params_, Rational(1));
    if (f_.mode == LimitMode::Affine) return one;
    return one + c.shifted(Exponent::unit(t_index_));
  }

  void tick() {
    if (++steps_ > kStepBudget) throw DepthExceeded("cluster recursion exceeded its step budget");
  }

  static OptExp min_val(const std::vector<Member>& ms) {
    OptExp m;
    for (const auto& mem : ms)
      if (!mem.z.is_zero() && (!m || mem.z.valuation() < *m)) m = mem.z.valuation();
    return m;
  }

  int emit_leaf(const std::vector<Member>& ms, const Exponent& e, const Rational& kappa) {
    int id = static_cast<int>(curve_.components.size());
    curve_.components.push_back({id, FieldTriple::translation()});
    for (const auto& mem : ms) curve_.markings[mem.index] = Place{id, ChartPoint(mem.z.coeff_at(e) / kappa)};
    return id;
  }

  // Groups members by the coefficient of t^m in their residual, in order of
  // first appearance.
  static std::vector<std::pair<Rational, std::vector<Member>>> split(std::vector<Member> ms, const Exponent& m) {
    std::vector<std::pair<Rational, std::vector<Member>>> groups;
    for (auto& mem : ms) {
      Rational u = mem.z.coeff_at(m);
      auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == u; });
      if (it == groups.end()) {
        groups.emplace_back(u, std::vector<Member>{});
        it = groups.end() - 1;
      }
      it->second.push_back(std::move(mem));
    }
    return groups;
  }

  int emit_internal() {
    int id = static_cast<int>(curve_.components.size());
    curve_.components.push_back({id, FieldTriple::zero()});
    return id;
  }

  void attach(int parent, const Rational& at, int child) {
    curve_.nodes.push_back({Place{parent, ChartPoint(at)}, Place{child, ChartPoint::infinity()}});
  }

  int build_recenter(ScalePath c, std::vector<Member> ms) {
    while (true) {
      tick();
      ScalePath F = field_factor(c);
      OptExp e = F.is_zero() ? OptExp{} : OptExp{F.valuation()};
      OptExp m = min_val(ms);
      if (e && val_geq(m, e)) return emit_leaf(ms, *e, F.leading_coefficient());
      if (!m) throw PreconditionFailed("markings collide with a zero of the field");
      auto groups = split(std::move(ms), *m);
      if (groups.size() == 1) {
        ScalePath shift = ScalePath::monomial(params_, *m, groups[0].first);
        c = c + shift;
        ms = std::move(groups[0].second);
        for (auto& mem : ms) mem.z = mem.z - shift;
        continue;
      }
      int id = emit_internal();
      for (auto& [gamma, sub] : groups) {
        ScalePath shift = ScalePath::monomial(params_, *m, gamma);
        for (auto& mem : sub) mem.z = mem.z - shift;
        attach(id, gamma, build_recenter(c + shift, std::move(sub)));
      }
      return id;
    }
  }

  int build_first(std::vector<Member> ms) {
    tick();
    const ScalePath c = ms.front().x;
    for (auto& mem : ms) mem.z = mem.x - c;
    ScalePath F = field_factor(c);
    OptExp e = F.is_zero() ? OptExp{} : OptExp{F.valuation()};
    OptExp m = min_val(ms);
    if (e && val_geq(m, e)) return emit_leaf(ms, *e, F.leading_coefficient());
    if (!m) throw PreconditionFailed("markings collide with a zero of the field");
    auto groups = split(std::move(ms), *m);
    int id = emit_internal();
    for (auto& [gamma, sub] : groups) attach(id, gamma, build_first(std::move(sub)));
    return id;
  }

  const PathFamily& f_;
  CenterRule rule_;
  ScalePath::Params params_;
  std::size_t t_index_ = 0;
  MarkedCurve curve_;
  int steps_ = 0;
};

PnTree tree_below(const MarkedCurve& c, int comp, int parent) {
  PnTree t;
  for (std::size_t j = 0; j < c.markings.size(); ++j)
    if (c.markings[j].comp == comp) t.marks.push_back(static_cast<int>(j) + 1);
  for (const auto& [own, other] : c.branches(comp))
    if (other.comp != parent) t.children.push_back(tree_below(c, other.comp, comp));
  return t;
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw ParseError("empty grid list");
  return out;
}

}  // namespace

MarkedCurve stable_limit(const PathFamily& f, CenterRule rule) {
  if (f.paths.empty()) throw PreconditionFailed("stable_limit needs at least one marking");
  MarkedCurve c = Builder(f, rule).run();
  Diagnostics d = pn_object_check(c);
  if (!d.pass()) throw InvariantViolation("stable limit is not a stable object: " + d.str());
  return c;
}

LMType lm_type_of_path(const std::vector<ScalePath>& y) {
  if (y.empty()) throw PreconditionFailed("no paths");
  const auto& params = y.front().params();
  auto it = std::find(params.begin(), params.end(), "s");
  std::size_t si = it == params.end() ? 0 : static_cast<std::size_t>(it - params.begin());
  std::map<int, std::vector<int>, std::greater<>> blocks;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i].is_zero()) throw ZeroPath("path y" + std::to_string(i + 1) + " is zero");
    blocks[y[i].poly().min_degree(si)].push_back(static_cast<int>(i) + 1);
  }
  LMType t;
  for (auto& [v, b] : blocks) t.blocks.push_back(b);
  return t;
}

PnType type_of_curve(const MarkedCurve& c) {
  Diagnostics d = pn_object_check(c);
  if (!d.pass()) throw NotAPnObject(d.str());
  return PnType{tree_below(c, c.p_infty.comp, -1)};
}

SampleGrid SampleGrid::default_grid() {
  SampleGrid g;
  g.position = {Rational(1), Rational(2), Rational(3), Rational(5)};
  g.first = {Rational(0), Rational(1), Rational(-1)};
  g.second = {Rational(0), Rational(1), Rational(-1)};
  return g;
}

SampleGrid SampleGrid::parse(const std::string& text) {
  SampleGrid g = default_grid();
  if (text.empty() || text == "default") return g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ParseError("grid entry '" + part + "' lacks '='");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    if (key == "a") g.position = parse_list(val);
    else if (key == "b") g.first = parse_list(val);
    else if (key == "c") g.second = parse_list(val);
    else if (key == "min") g.min_samples = std::stoul(val);
    else throw ParseError("unknown grid key '" + key + "'");
  }
  for (const auto& a : g.position)
    if (a.is_zero()) throw ParseError("grid positions must be nonzero");
  return g;
}

std::vector<ScalePath> sampler_paths(const LMType& t, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b, const std::vector<Rational>& c) {
  static const ScalePath::Params params{"s", "t"};
  const int k = static_cast<int>(t.blocks.size());
  std::vector<ScalePath> x(t.n(), ScalePath(params));
  for (int bi = 0; bi < k; ++bi) {
    const int r = k - bi;
    for (int i : t.blocks[bi]) {
      const std::size_t j = static_cast<std::size_t>(i) - 1;
      // (a s^r (1 + b t + c t^2) - 1) / t
      x[j] = ScalePath(params, SparsePoly<Rational>::from_terms(
                                   2, {{Exponent{r, -1}, a[j]},
                                       {Exponent{r, 0}, a[j] * b[j]},
                                       {Exponent{r, 1}, a[j] * c[j]},
                                       {Exponent{0, -1}, Rational(-1)}}));
    }
  }
  return x;
}

SpecializationReport specialize_lm(const LMType& t, const SampleGrid& grid, unsigned jobs) {
  const int n = t.n();
  const std::size_t na = grid.position.size(), nb = grid.first.size(), nc = grid.second.size();
  const std::size_t per = na * nb * nc;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= per;
  const std::string want = t.key();

  using Counts = std::map<std::string, std::size_t>;
  auto work = [&](std::size_t begin, std::size_t step, Counts& out, std::size_t& done) {
    std::vector<Rational> a(n), b(n), c(n);
    for (std::size_t k = begin; k < total; k += step) {
      std::size_t r = k;
      for (int i = 0; i < n; ++i) {
        std::size_t d = r % per;
        r /= per;
        a[i] = grid.position[d % na];
        b[i] = grid.first[(d / na) % nb];
        c[i] = grid.second[d / (na * nb)];
      }
      PathFamily f{LimitMode::Degeneration, sampler_paths(t, a, b, c)};
      // y_i = 1 + t x_i recovers the Losev-Manin configuration.
      std::vector<ScalePath> y;
      for (const auto& x : f.paths)
        y.push_back(ScalePath::constant(x.params(), Rational(1)) + x.shifted(Exponent{0, 1}));
      if (lm_type_of_path(y).key() != want)
        throw InvariantViolation("sample does not lie on stratum " + want);
      ++out[type_of_curve(stable_limit(f)).key()];
      ++done;
    }
  };

  jobs = std::max(1u, jobs);
  std::vector<Counts> parts(jobs);
  std::vector<std::size_t> done(jobs, 0);
  if (jobs == 1) {
    work(0, 1, parts[0], done[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned j = 0; j < jobs; ++j)
      threads.emplace_back([&, j] {
        try {
          work(j, jobs, parts[j], done[j]);
        } catch (...) {
          errors[j] = std::current_exception();
        }
      });
    for (auto& th : threads) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  SpecializationReport rep;
  rep.source = t;
  for (unsigned j = 0; j < jobs; ++j) {
    rep.samples += done[j];
    for (const auto& [key, cnt] : parts[j]) rep.collected[key] += cnt;
  }
  if (rep.samples < grid.min_samples)
    throw GridTooCoarse(std::to_string(rep.samples) + " samples, need " + std::to_string(grid.min_samples));

  std::vector<PnType> types;
  for (const auto& [key, cnt] : rep.collected) types.push_back(PnType::parse(key));
  for (std::size_t i = 0; i < types.size(); ++i) {
    bool below = false;
    for (std::size_t j = 0; j < types.size() && !below; ++j)
      below = i != j && closure_leq(types[i], types[j]) && !(types[i] == types[j]);
    if (!below) rep.maximal.push_back(types[i].key());
  }
  std::sort(rep.maximal.begin(), rep.maximal.end());
  return rep;
}

}  // namespace nvf
