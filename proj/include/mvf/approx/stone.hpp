#pragma once

#include <string>
#include <vector>

#include "mvf/chain/base.hpp"
#include "mvf/exact/rational.hpp"

namespace mvf {

// An open condition on x in Q at one place: a p-adic ball
// v_p(x - center) >= bound (> bound when strict), or lo < x < hi.
struct Constraint {
  enum class Kind { Valuation, Interval };
  Kind kind = Kind::Valuation;
  Integer prime = 0;
  Rat center = 0, bound = 0;
  bool strict = false;
  Rat lo = 0, hi = 0;

  static Constraint val_ge(long p, Rat center, Rat bound);
  static Constraint val_gt(long p, Rat center, Rat bound);
  static Constraint interval(Rat lo, Rat hi);

  // Smallest integer g with v_p(x - center) >= g equivalent to the condition.
  Integer integral_bound() const;
  bool satisfied_by(const Rat& x) const;
  std::string to_string() const;
};

bool operator==(const Constraint& a, const Constraint& b);

// A rational satisfying every constraint, re-verified before it is
// returned. InconsistentSamePlace when two constraints at one place have
// empty intersection; 0 for an empty list.
Rat stone_solve(const std::vector<Constraint>& constraints);

// Nonzero eps with v_p(eps) >= valuation_bound at every valued place of the
// base and 0 < eps < scale.
Rat infinitesimal(const BaseStructure& base, const Rat& scale, int valuation_bound = 1);

}  // namespace mvf
