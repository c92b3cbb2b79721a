#pragma once

// Seeded random inputs shared by unit and acceptance tests.

#include <optional>
#include <random>
#include <vector>

#include "nodalvf/bubble.hpp"
#include "nodalvf/curve.hpp"
#include "nodalvf/limits.hpp"

namespace gen {

using Rng = std::mt19937_64;

nvf::Rational small_rational(Rng& rng, int num_range = 4, int den_max = 3);
nvf::Rational small_nonzero(Rng& rng, int num_range = 4, int den_max = 3);
nvf::Mobius random_mobius(Rng& rng);

// Same curve with every component moved by an independent chart change and
// component ids permuted. Returns the moved extra section as well.
struct Moved {
  nvf::MarkedCurve curve;
  std::optional<nvf::Place> x;
};
Moved scramble(const nvf::MarkedCurve& c, const std::optional<nvf::Place>& x, Rng& rng);

// Single component: p_infty at a zero of a random nonzero field, n markings
// at points where the field does not vanish (coincidences allowed).
nvf::MarkedCurve random_single(Rng& rng, int n);

// A V curve built by repeated bubbling: start from random_single and insert
// bubbles at p_infty, nodes and zeros, turning the new sections into
// markings, up to n markings.
nvf::MarkedCurve random_grown(Rng& rng, int n);

// A curve of the given kind with a valid extra section, drawn from several
// families (single components, grown curves, stable limits, bubbling outputs).
struct WithX {
  nvf::MarkedCurve curve;
  nvf::Place x;
};
WithX random_c1(Rng& rng, int max_n);
WithX random_c2(Rng& rng, int max_n);
WithX random_c3(Rng& rng, int max_n);

// Random Laurent path family with n markings over rank 1 or 2 parameters.
nvf::PathFamily random_family(Rng& rng, nvf::LimitMode mode, int n, int rank);

// Canonical text of a curve for exact comparisons.
std::string dump(const nvf::MarkedCurve& c);

}  // namespace gen
