#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mvf/galois/closure.hpp"
#include "mvf/galois/fixed_field.hpp"
#include "mvf/local/ext_value.hpp"
#include "mvf/local/padic.hpp"
#include "mvf/local/real_roots.hpp"

namespace mvf {

// All places of L of one kind: the archimedean places (complex-conjugate
// pairs of embeddings) or the places above a prime p. Places are left
// cosets of the decomposition group D of a base place; g acts by left
// multiplication and place x = rep(x) D has stabilizer rep(x) D rep(x)^-1.
class PlaceSet {
 public:
  static std::shared_ptr<const PlaceSet> archimedean(ClosurePtr closure);
  static std::shared_ptr<const PlaceSet> above(ClosurePtr closure, const Integer& p,
                                               const PrecisionOptions& prec = default_precision());

  const ClosurePtr& closure() const { return closure_; }
  bool is_archimedean() const { return prime_ == 0; }
  const Integer& prime() const { return prime_; }
  int count() const { return static_cast<int>(reps_.size()); }
  Mask decomposition() const { return d_; }
  const FixedField& decomposition_field() const { return *z_; }
  int representative(int x) const { return reps_[x]; }
  int act(int g, int x) const { return action_[g * count() + x]; }
  Mask stabilizer(int x) const { return stab_[x]; }
  Mask orbit(Mask h, int x) const;  // bit set over places

  // Archimedean: sign of z under the real embedding of Fix(stabilizer(x))
  // attached to x. z must be fixed by stabilizer(x).
  int sign(int x, const NFElement& z) const;
  // p-adic: normalized valuation w_x(z), v(p) = 1.
  ExtValue valuation(int x, const NFElement& z) const;
  // p-adic: image in Q_p of z fixed by stabilizer(x), to abs precision prec.
  PAdicApprox embed(int x, const NFElement& z, int64_t prec) const;
  bool nth_power(int x, const NFElement& z, unsigned n) const;
  // Is z congruent to 0 modulo the place (w_x(z) > 0)?
  bool in_maximal_ideal(int x, const NFElement& z) const;

  const std::optional<RealRootInterval>& base_interval() const { return interval_; }
  const std::optional<PAdicRoot>& base_root() const { return root_; }
  const PrecisionOptions& precision() const { return prec_; }

 private:
  PlaceSet() = default;
  void build_cosets();

  ClosurePtr closure_;
  Integer prime_ = 0;
  PrecisionOptions prec_;
  Mask d_ = 1;
  std::shared_ptr<FixedField> z_;
  std::optional<RealRootInterval> interval_;
  std::optional<PAdicRoot> root_;
  std::vector<int> reps_;
  std::vector<int> coset_of_;  // group element -> place index
  std::vector<int> action_;
  std::vector<Mask> stab_;
};

using PlaceSetPtr = std::shared_ptr<const PlaceSet>;

// Complex conjugations of L, one per distinct element (identity iff L is
// totally real).
std::vector<int> conjugation_involutions(ClosurePtr closure);

}  // namespace mvf
