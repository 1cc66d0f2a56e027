#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mvf/approx/stone.hpp"
#include "mvf/chain/base.hpp"
#include "mvf/exact/poly.hpp"

namespace mvf {

// Root existence of an irreducible f in each local model of the base.
struct A1Report {
  Poly poly;
  std::vector<std::pair<PlaceSpec, bool>> per_place;  // has_root
  bool a1_clause_met = false;  // some place has no root, or deg f <= 1
};

// PreconditionViolated unless f is irreducible over Q.
A1Report a1prime_oracle(const Poly& f, const BaseStructure& base);

// Places of an existentially closed candidate: places[0] carries T_1 (any
// kind), the rest must be ACVF. An ACVF entry with prime 0 stands for a
// trivial valuation.
struct ECDescription {
  std::vector<PlaceSpec> places;
};

struct ECReport {
  bool t1_model_ok = false;
  std::vector<bool> nontrivial;  // one per place after the first
  bool pairwise_distinct_topologies = false;
  bool verdict = false;
};

// HypothesisViolated if some place after the first is not ACVF.
ECReport ec_check(const ECDescription& desc);

struct ShatterState {
  unsigned subset = 0;  // bit j-1 set iff psi(a_j + eps) holds
  std::string state;    // descriptor of a maximal state realizing it
};

struct ShatterReport {
  int m = 0;
  Integer prime;
  std::vector<Rat> a_values;
  Rat epsilon;
  int closure_degree = 0;
  int maximal_states = 0;
  std::vector<ShatterState> realized;  // first realizing state, by subset
  // Twisting the ordering datum of a base state by sigma_S moves its subset
  // by symmetric difference with S; checked for every S.
  bool twists_consistent = false;
  bool all_subsets() const { return realized.size() == (size_t(1) << m); }
};

// Base (RCF, ACVF(p)); a_j = 1/4 + p j and eps = infinitesimal with
// v_p(eps) >= 2, |eps| < 1/100. PreconditionViolated unless 1 <= m <= 3.
ShatterReport ip_shatter_demo(int m, long p = 5);

struct BurdenPath {
  std::vector<int> eta;
  Rat product_witness;  // prod p_i^eta(i)
  Rat solver_witness;   // from stone_solve with v_{p_i}(x) = eta(i)
  bool verified = false;
};

struct BurdenReport {
  std::vector<long> primes;
  int width = 0;
  std::vector<bool> row_inconsistent;  // rows v_{p_i}(x) = j, j < width
  std::vector<BurdenPath> paths;
  bool all_witnessed() const;
};

// depth = number of rows; must equal primes.size().
BurdenReport burden_pattern_demo(const std::vector<long>& primes, int depth, int width);

// x^2 - y has exactly two branches over p and exactly one satisfies
// v(x - 1/2) > 0. PreconditionViolated unless v_p(y - 1/4) > 0.
bool newton_dichotomy_check(const Rat& y, long p);

}  // namespace mvf
