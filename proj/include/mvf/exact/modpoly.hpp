#pragma once

#include <cstdint>
#include <vector>

#include "mvf/exact/rational.hpp"

namespace mvf::modp {

// Polynomials over Z/p for a word-size prime p, lowest degree first,
// trimmed (zero polynomial is empty).
using MPoly = std::vector<uint64_t>;

void trim(MPoly& a);
MPoly add(const MPoly& a, const MPoly& b, uint64_t p);
MPoly sub(const MPoly& a, const MPoly& b, uint64_t p);
MPoly mul(const MPoly& a, const MPoly& b, uint64_t p);
MPoly scale(const MPoly& a, uint64_t s, uint64_t p);
void divmod(const MPoly& a, const MPoly& b, uint64_t p, MPoly& q, MPoly& r);
MPoly rem(const MPoly& a, const MPoly& b, uint64_t p);
MPoly gcd(const MPoly& a, const MPoly& b, uint64_t p);
MPoly monic(const MPoly& a, uint64_t p);
MPoly derivative(const MPoly& a, uint64_t p);
MPoly powmod(const MPoly& base, const Integer& e, const MPoly& m, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);
uint64_t eval(const MPoly& a, uint64_t x, uint64_t p);

// Image of an integer polynomial; coefficient list may have trailing zeros.
MPoly reduce(const std::vector<Integer>& a, uint64_t p);

bool is_squarefree(const MPoly& f, uint64_t p);

// Number of irreducible factors of a squarefree monic f (Berlekamp rank).
int berlekamp_count(const MPoly& f, uint64_t p);
// Complete factorization of a squarefree monic f into monic irreducibles,
// sorted by (degree, coefficients).
std::vector<MPoly> berlekamp_factor(const MPoly& f, uint64_t p);

}  // namespace mvf::modp
