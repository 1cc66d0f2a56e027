#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mvf/exact/rational.hpp"

namespace mvf {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);
  static Poly constant(const Rat& c);
  static Poly x();
  static Poly monomial(const Rat& c, int deg);
  static Poly from_ints(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int i) const;
  const Rat& lead() const { return c_.back(); }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;
  // f(g(x))
  Poly compose(const Poly& g) const;
  // f(x + a)
  Poly shift(const Rat& a) const;
  // f(c x)
  Poly scale_arg(const Rat& c) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned e);

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
// Returns (g, s, t) with s a + t b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd poly_ext_gcd(const Poly& a, const Poly& b);

Rat resultant(const Poly& a, const Poly& b);
Rat discriminant(const Poly& f);

Poly squarefree_part(const Poly& f);
bool is_squarefree(const Poly& f);
// Yun: f = lc * prod factors[i]^(i+1), factors pairwise coprime, monic.
std::vector<Poly> squarefree_decomposition(const Poly& f);

// Content and primitive integer polynomial: f = content * prim.
struct IntegerForm {
  Rat content;
  std::vector<Integer> prim;
};
IntegerForm primitive_integer_form(const Poly& f);
Poly from_integers(const std::vector<Integer>& c);

// Monic integral polynomial with roots c*alpha for roots alpha of f.
struct MonicIntegral {
  Poly poly;
  Rat scale;
};
MonicIntegral make_monic_integral(const Poly& f);

// Newton interpolation through (xs[i], ys[i]).
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace mvf
