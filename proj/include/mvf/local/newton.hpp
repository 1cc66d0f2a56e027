#pragma once

#include <vector>

#include "mvf/exact/poly.hpp"

namespace mvf {

struct NewtonSegment {
  Rat slope;   // valuation of the roots on this segment
  int length;  // number of roots (with multiplicity)
};

struct NewtonPolygonResult {
  std::vector<NewtonSegment> slopes;  // ascending root valuation
  int zero_roots = 0;                 // stripped roots at 0
};

// Lower convex hull of (i, v_p(c_i)); a segment of geometric slope -s and
// horizontal length l accounts for l roots of valuation s.
NewtonPolygonResult newton_polygon(const Poly& f, const Integer& p);

}  // namespace mvf
