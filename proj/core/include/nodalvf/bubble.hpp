#pragma once

#include <optional>

#include "nodalvf/curve.hpp"

namespace nvf {

// Records which component (if any) collapses and where it lands. For the
// bubbling-up operations the bubble lives in the output and lands on `image`
// in the input; for bubbling down the contracted component lives in the input
// and lands on `image` in the output.
struct ContractionMap {
  bool identity = true;
  int bubble_component = -1;
  Place image;
};

struct BubbleResult {
  MarkedCurve curve;
  Place new_x;
  ContractionMap map;
};

// Inserts a component at x when x is a node or hits p_infty. The bubble is a
// P^1 with field w u d/du; the branch of weight w attaches at its infinity and
// new_x sits at 1.
BubbleResult knudsen_stabilize(const MarkedCurve& c, const Place& x);

// Inserts a component at x when the field vanishes there, attached through
// its infinity, with field (1 + w u) d/du and new_x at 0.
BubbleResult inflate_at_zero(const MarkedCurve& c, const Place& x);

// Contracts the unique component of twisted degree 0 for kind C2 or C3.
BubbleResult bubble_down(const MarkedCurve& c, CurveKind kind, const Place& x);

}  // namespace nvf
