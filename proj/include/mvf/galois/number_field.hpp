#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mvf/exact/poly.hpp"

namespace mvf {

// Q[t]/(m) for a monic irreducible m.
class NumberField {
 public:
  // Certifies irreducibility unless trusted is set.
  static std::shared_ptr<const NumberField> create(const Poly& m, bool trusted = false);

  const Poly& defining_poly() const { return m_; }
  int degree() const { return m_.degree(); }

 private:
  explicit NumberField(Poly m) : m_(std::move(m)) {}
  Poly m_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
 public:
  NFElement() = default;
  NFElement(FieldPtr field, Poly rep);
  static NFElement rational(FieldPtr field, const Rat& c);
  static NFElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const Poly& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.degree() <= 0; }
  Rat rational_value() const { return rep_.coeff(0); }

  NFElement operator-() const;
  NFElement inverse() const;
  NFElement pow(unsigned e) const;
  // Norm to Q: resultant(m, rep).
  Rat norm() const;

  friend NFElement operator+(const NFElement& a, const NFElement& b);
  friend NFElement operator-(const NFElement& a, const NFElement& b);
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }
  friend bool operator==(const NFElement& a, const NFElement& b) { return a.rep_ == b.rep_; }

  std::string to_string() const { return rep_.to_string("t"); }

 private:
  FieldPtr field_;
  Poly rep_;
};

// f(x) evaluated at an element.
NFElement eval(const Poly& f, const NFElement& x);

// Polynomial in x over a number field, lowest degree first.
class LPoly {
 public:
  LPoly() = default;
  LPoly(FieldPtr field, std::vector<NFElement> coeffs);
  static LPoly from_rational(FieldPtr field, const Poly& f);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<NFElement>& coeffs() const { return c_; }
  NFElement coeff(int i) const;
  const NFElement& lead() const { return c_.back(); }

  NFElement eval(const NFElement& x) const;
  LPoly monic() const;
  LPoly derivative() const;
  LPoly shift(const NFElement& a) const;  // f(x + a)

  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b);
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  FieldPtr field_;
  std::vector<NFElement> c_;
};

void divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r);
LPoly lgcd(const LPoly& a, const LPoly& b);

// Norm_{K/Q} of g(x - s t), computed by evaluation/interpolation.
Poly trager_norm(const LPoly& g, const Rat& s);

struct TragerFactor {
  LPoly factor;     // monic irreducible over K
  Poly norm;        // irreducible over Q, norm of factor(x - s t)
  Rat shift;        // s
};

// Irreducible factors over K of a squarefree g.
std::vector<TragerFactor> factor_over_field(const LPoly& g);

}  // namespace mvf
