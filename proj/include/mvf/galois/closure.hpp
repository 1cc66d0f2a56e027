#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mvf/exact/poly.hpp"
#include "mvf/galois/number_field.hpp"

namespace mvf {

using Mask = uint64_t;  // subgroup as a bit set over group element indices

struct ClosureOptions {
  int degree_cap = 24;
};

// Splitting field L of a squarefree generator over Q with its Galois group
// acting on the generator's roots. Group element 0 is the identity.
class GaloisClosure {
 public:
  static std::shared_ptr<const GaloisClosure> build(const Poly& f, const ClosureOptions& opt = {});

  const FieldPtr& field() const { return field_; }
  int degree() const { return field_->degree(); }
  const Poly& generator_poly() const { return generator_; }
  const std::vector<NFElement>& roots() const { return roots_; }
  // Index into generator_factors() of each root.
  const std::vector<int>& root_factor() const { return root_factor_; }
  const std::vector<Poly>& generator_factors() const { return factors_; }
  // Coefficients of the field generator as a combination of the roots.
  const std::vector<Rat>& theta_coefficients() const { return theta_coef_; }

  int order() const { return static_cast<int>(perms_.size()); }
  const std::vector<std::vector<int>>& permutations() const { return perms_; }
  int mul(int a, int b) const { return mul_[a * order() + b]; }  // a after b
  int inv(int a) const { return inv_[a]; }
  int element_order(int a) const;
  NFElement apply(int g, const NFElement& x) const;
  bool is_abelian() const;

  Mask full_mask() const;
  Mask generate(Mask parts) const;
  Mask conjugate(int g, Mask h) const;  // g h g^-1
  bool is_subgroup(Mask h) const;
  std::vector<int> members(Mask h) const;
  // All subgroups, by (order, mask).
  const std::vector<Mask>& subgroups() const { return subgroups_; }

  // Roots in L of f, in a deterministic order.
  std::vector<NFElement> roots_of(const Poly& f) const;
  // Roots of f in L fixed by every element of h.
  std::vector<NFElement> roots_in_fixed_field(const Poly& f, Mask h) const;
  bool contains_splitting_field(const Poly& f) const;

  // Same field with the roots renamed by the group element g:
  // new root k is old root perm_g(k).
  std::shared_ptr<const GaloisClosure> relabeled(int g) const;

  std::string describe_element(int g) const;

 private:
  GaloisClosure() = default;
  void finish();

  FieldPtr field_;
  Poly generator_;
  std::vector<Poly> factors_;
  std::vector<NFElement> roots_;
  std::vector<int> root_factor_;
  std::vector<Rat> theta_coef_;
  std::vector<std::vector<int>> perms_;
  // Per element: images of t^k as integer columns over a common denominator.
  struct Action {
    Integer den;
    std::vector<Integer> num;  // num[k * d + i]: coefficient i of the image of t^k
  };
  std::vector<Action> actions_;
  std::vector<int> mul_, inv_;
  std::vector<Mask> subgroups_;
};

using ClosurePtr = std::shared_ptr<const GaloisClosure>;

int popcount(Mask m);

}  // namespace mvf
