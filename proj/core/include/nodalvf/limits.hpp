#pragma once

#include <map>
#include <string>
#include <vector>

#include "nodalvf/curve.hpp"
#include "nodalvf/scale_path.hpp"
#include "nodalvf/strata.hpp"

namespace nvf {

enum class LimitMode { Affine, Degeneration };
std::string to_string(LimitMode m);
LimitMode limit_mode_from_string(const std::string& s);

// n marking paths over one parameter tuple. In degeneration mode the field is
// (1 + t x) d/dx with t the parameter named "t" (the last one if none is).
struct PathFamily {
  LimitMode mode = LimitMode::Affine;
  std::vector<ScalePath> paths;
};

enum class CenterRule {
  Recenter,      // accumulate the common leading term of a cluster
  FirstMarking,  // center every cluster at its first marking
};

// Limit as all parameters tend to 0: a tree of lines whose leaves carry d/dw
// and whose other components carry the zero field, p_infty at infinity of the
// root. Throws PreconditionFailed if 1 + t x_i vanishes identically.
MarkedCurve stable_limit(const PathFamily& f, CenterRule rule = CenterRule::Recenter);

// Blocks of equal valuation in the parameter "s" (the first one if none is),
// nearest 0 (largest valuation) first.
LMType lm_type_of_path(const std::vector<ScalePath>& y);

// Stratum of a curve passing pn_object_check; NotAPnObject otherwise.
PnType type_of_curve(const MarkedCurve& c);

struct SampleGrid {
  std::vector<Rational> position;  // a_i
  std::vector<Rational> first;     // b_i, coefficient of t
  std::vector<Rational> second;    // c_i, coefficient of t^2
  std::size_t min_samples = 1;

  static SampleGrid default_grid();
  // "default", or "a=1,2;b=0,1;c=0" with any subset of keys overriding the default.
  static SampleGrid parse(const std::string& text);
};

struct SpecializationReport {
  LMType source;
  std::size_t samples = 0;
  std::map<std::string, std::size_t> collected;  // PnType key -> hits
  std::vector<std::string> maximal;              // sorted keys
};

// Samples y_i = a_i s^r (1 + b_i t + c_i t^2), where r is the 1-based rank of
// i's block counted from the infinity end, sets x_i = (y_i - 1)/t, and records
// the strata of the stable limits. jobs > 1 splits the grid across threads;
// the report does not depend on it.
SpecializationReport specialize_lm(const LMType& t, const SampleGrid& grid, unsigned jobs = 1);

// The sampled x-paths for one grid point, indexed per marking by grid choice.
std::vector<ScalePath> sampler_paths(const LMType& t, const std::vector<Rational>& a,
                                     const std::vector<Rational>& b, const std::vector<Rational>& c);

}  // namespace nvf
