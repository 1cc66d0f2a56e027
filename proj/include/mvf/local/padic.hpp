#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "mvf/exact/poly.hpp"

namespace mvf {

struct PrecisionOptions {
  int64_t initial = 10;
  int64_t cap = 640;
};

// Default precision cap, overridable through MVF_PRECISION_CAP.
PrecisionOptions default_precision();

// Element of Q_p known up to p^abs_prec: x = value + O(p^abs_prec).
struct PAdicApprox {
  static constexpr int64_t kExact = std::numeric_limits<int64_t>::max() / 4;

  Integer p;
  Rat value;
  int64_t abs_prec = kExact;

  static PAdicApprox exact(const Integer& p, const Rat& v) { return {p, v, kExact}; }
  bool is_exact() const { return abs_prec >= kExact; }
  // Valuation if determined at this precision.
  std::optional<int64_t> val() const;
  // Reduced representative: integer times a power of p.
  void normalize();
};

PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox operator-(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b);
PAdicApprox eval(const Poly& f, const PAdicApprox& x);

// Root of a polynomial in Q_p. Internally x = offset + p^shift * y / scale
// where y is the unique Z_p-root of h congruent to y0 mod p, h'(y0) a unit.
class PAdicRoot {
 public:
  PAdicRoot(Integer p, Integer offset, int shift, std::vector<Integer> h, Integer y0,
            Rat scale);
  const Integer& prime() const { return p_; }
  // Approximation with abs_prec >= prec.
  PAdicApprox approx(int64_t prec) const;
  // Valuation of the root (exact; may be +inf only for the root 0, which
  // is reported as nullopt).
  std::optional<int64_t> val() const;

 private:
  Integer p_, offset_;
  int shift_;
  std::vector<Integer> h_;
  Integer y0_;
  Rat scale_;
  mutable std::vector<Integer> cache_;  // lifted y, cache_[k] mod p^(k+1)
};

// All roots in Q_p of f (distinct roots of the squarefree part), ordered by
// their p-adic digits.
std::vector<PAdicRoot> padic_roots(const Poly& f, const Integer& p);
bool has_padic_root(const Poly& f, const Integer& p);

// Unit u (an integer prime to p): is u an n-th power in Z_p?
bool unit_is_nth_power(const Integer& u, unsigned n, const Integer& p);
// x != 0 in Q_p with known valuation and enough precision; nullopt if the
// precision does not decide.
std::optional<bool> is_nth_power(const PAdicApprox& x, unsigned n);
// Exact rational input; ZeroArgument for 0.
bool nth_power_in_Qp(const Rat& x, unsigned n, const Integer& p);

}  // namespace mvf
