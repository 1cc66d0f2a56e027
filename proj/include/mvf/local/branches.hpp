#pragma once

#include <optional>
#include <vector>

#include "mvf/galois/number_field.hpp"
#include "mvf/galois/places.hpp"
#include "mvf/local/ext_value.hpp"
#include "mvf/local/padic.hpp"
#include "mvf/local/real_roots.hpp"

namespace mvf {

// A Q_p-irreducible factor of a squarefree f, i.e. a place of Q[x]/(g) above
// p for an irreducible factor g of f. Realized inside the splitting field L
// as an orbit of roots of g under the decomposition group of a base place.
struct PAdicBranch {
  Integer prime;
  Poly poly;         // the Q-irreducible factor g
  int factor = 0;    // index of g among the closure's generator factors
  std::vector<int> roots;  // closure root indices forming the orbit
  std::vector<PAdicApprox> local_factor;  // monic local factor, low first
  std::optional<PAdicApprox> approx_root;  // degree-1 branches
  int precision = 0;
  int ram_index = 1;
  int res_degree = 1;
  PlaceSetPtr places;

  int degree() const { return static_cast<int>(roots.size()); }
};

// Branches of every irreducible factor of f over p, local factors known to
// absolute precision k. UnsupportedRamification if e and f cannot be
// certified.
std::vector<PAdicBranch> hensel_branches(const Poly& f, const Integer& p, int k);

// Valuation of an element of Q[x]/(branch.poly) at the branch's place.
ExtValue value_at(const PAdicBranch& branch, const NFElement& elem);
// Sign of an element of Q[x]/(iv.poly) at the real root isolated by iv.
int sign_at(const RealRootInterval& iv, const NFElement& elem);

// A place of the number field Q[x]/(field_poly): either a real embedding
// (interval) or a p-adic branch.
struct PlaceDatum {
  Poly field_poly;
  std::optional<RealRootInterval> interval;
  std::optional<PAdicBranch> branch;

  static PlaceDatum rational_real();
  static PlaceDatum rational_padic(const Integer& p);
};

bool same_topology(const PlaceDatum& a, const PlaceDatum& b);

struct Ramification {
  int e = 1, f = 1;
  Mask inertia = 1;
};
// Ramification of the base place of a p-adic PlaceSet; certified by
// explicit elements, UnsupportedRamification when no certificate is found.
Ramification certify_ramification(const PlaceSet& places);

}  // namespace mvf
