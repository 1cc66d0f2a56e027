#pragma once

#include <vector>

#include "mvf/exact/rational.hpp"

namespace mvf {

struct Congruence {
  Integer modulus;
  Integer residue;
};

struct CrtResult {
  Integer residue;  // in [0, modulus)
  Integer modulus;
};

// Pairwise coprime moduli required (NonCoprimeModuli otherwise).
CrtResult crt(const std::vector<Congruence>& system);

}  // namespace mvf
