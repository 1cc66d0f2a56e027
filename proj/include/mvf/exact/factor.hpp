#pragma once

#include <utility>
#include <vector>

#include "mvf/exact/poly.hpp"

namespace mvf {

struct FactorList {
  Rat unit;
  std::vector<std::pair<Poly, int>> factors;  // monic irreducible, multiplicity

  Poly expand() const;
};

struct FactorOptions {
  int degree_cap = 64;
};

// Complete factorization over Q: squarefree decomposition, then
// Berlekamp mod a good prime, Hensel lifting and exact recombination.
FactorList factor_over_Q(const Poly& f, const FactorOptions& opt = {});

// Monic irreducible factors of a squarefree f, each once.
std::vector<Poly> irreducible_factors(const Poly& f, const FactorOptions& opt = {});

bool is_irreducible(const Poly& f);

// Rational roots of f (distinct, ascending).
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace mvf
