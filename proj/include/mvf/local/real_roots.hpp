#pragma once

#include <vector>

#include "mvf/exact/poly.hpp"

namespace mvf {

// Isolating interval: poly squarefree with exactly one root in (lo, hi);
// neither endpoint is a root.
struct RealRootInterval {
  Poly poly;
  Rat lo, hi;
};

std::vector<Poly> sturm_sequence(const Poly& f);
// Number of distinct roots in (a, b) for a, b not roots of seq[0].
int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b);
int count_real_roots(const Poly& f);

// One interval per distinct real root, ascending.
std::vector<RealRootInterval> isolate_real_roots(const Poly& f);

RealRootInterval refine(const RealRootInterval& iv, const Rat& max_width);

// Sign (-1, 0, +1) of h at the root isolated by iv; exact.
int sign_at_root(const RealRootInterval& iv, const Poly& h);

}  // namespace mvf
