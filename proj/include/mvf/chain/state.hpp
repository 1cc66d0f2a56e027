#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mvf/chain/base.hpp"
#include "mvf/galois/closure.hpp"
#include "mvf/galois/places.hpp"

namespace mvf {

// A structured subfield F = Fix(H) of L. For each base index i the
// structure on F is the restriction of a place of L of the right kind;
// places with the same restriction form one H-orbit, stored as a bit set
// over the place indices of the index's PlaceSet.
struct State {
  Mask h = 0;
  std::vector<Mask> orbits;
};

bool operator==(const State& a, const State& b);
bool operator<(const State& a, const State& b);  // by |H|, then H, then orbits

// Element of the i-th local closure set: the field Fix(stabilizer) with the
// structure of `place`. For RCF the stabilizer is generated by `involution`
// (complex conjugation, or the identity at a real place).
struct ClosureDatum {
  int index = 0;
  Theory kind = Theory::RCF;
  int place = 0;
  Mask stabilizer = 1;
  int involution = 0;
};

// Closure and base together with the place sets used for every index.
class ChainContext {
 public:
  static std::shared_ptr<const ChainContext> create(const BaseStructure& base, ClosurePtr closure);

  const BaseStructure& base() const { return base_; }
  const ClosurePtr& closure() const { return closure_; }
  int size() const { return base_.size(); }
  const PlaceSet& places(int i) const { return *places_[i]; }
  const PlaceSetPtr& place_set(int i) const { return places_[i]; }
  // Subgroup fixing the local closure at place x of index i: the
  // decomposition group for RCF and PCF, trivial for ACVF.
  Mask local_group(int i, int x) const;

  State initial_state() const;
  bool is_valid(const State& s) const;
  // A member x of s.orbits[i], the lowest index.
  int representative(const State& s, int i) const;
  std::vector<ClosureDatum> local_closures(const State& s, int i) const;
  // State after choosing sigma_i in H for each index; sigma is indexed by
  // base place.
  State successor(const State& s, const std::vector<int>& sigma) const;
  // Successor from explicit places y_i (each in the state's orbit).
  State successor_from_places(const State& s, const std::vector<int>& ys) const;
  // The state with every datum moved by g: (gHg^-1, g x_i).
  State translate(int g, const State& s) const;

  std::string describe(const State& s) const;

 private:
  BaseStructure base_;
  ClosurePtr closure_;
  std::vector<PlaceSetPtr> places_;
  std::vector<std::vector<Mask>> local_groups_;
};

using ContextPtr = std::shared_ptr<const ChainContext>;

// Minimal generating set of a subgroup, greedily by element index.
std::vector<int> subgroup_generators(const GaloisClosure& c, Mask h);

}  // namespace mvf
