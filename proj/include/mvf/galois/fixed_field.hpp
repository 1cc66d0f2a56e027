#pragma once

#include <vector>

#include "mvf/galois/closure.hpp"

namespace mvf {

// Fix(H) inside L with an integral primitive element.
class FixedField {
 public:
  FixedField(ClosurePtr closure, Mask h);

  Mask subgroup() const { return h_; }
  int degree() const { return minpoly_.degree(); }
  const NFElement& primitive() const { return eta_; }
  // Monic, integral, irreducible; its roots are the G-conjugates of eta.
  const Poly& minpoly() const { return minpoly_; }
  bool contains(const NFElement& z) const;
  // q with q(eta) = z, deg q < degree(); InvalidArgument if z is not fixed.
  Poly express(const NFElement& z) const;

 private:
  ClosurePtr closure_;
  Mask h_;
  NFElement eta_;
  Poly minpoly_;
  std::vector<int> pivot_rows_;
  std::vector<std::vector<Rat>> inverse_;
  std::vector<std::vector<Rat>> powers_;  // coordinates of eta^k
};

}  // namespace mvf
