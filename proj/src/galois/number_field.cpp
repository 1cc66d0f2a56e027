#include "mvf/galois/number_field.hpp"

#include "mvf/errors.hpp"
#include "mvf/exact/factor.hpp"

namespace mvf {

std::shared_ptr<const NumberField> NumberField::create(const Poly& m, bool trusted) {
  if (m.degree() < 1 || m.lead() != 1)
    fail(ErrorCode::InvalidArgument, "defining polynomial must be monic of degree >= 1");
  if (!trusted && !is_irreducible(m))
    fail(ErrorCode::InvalidArgument, "defining polynomial is reducible: " + m.to_string());
  return std::shared_ptr<const NumberField>(new NumberField(m));
}

NFElement::NFElement(FieldPtr field, Poly rep) : field_(std::move(field)) {
  if (rep.degree() >= field_->degree())
    rep_ = rep % field_->defining_poly();
  else
    rep_ = std::move(rep);
}

NFElement NFElement::rational(FieldPtr field, const Rat& c) {
  return NFElement(std::move(field), Poly::constant(c));
}

NFElement NFElement::generator(FieldPtr field) {
  return NFElement(std::move(field), Poly::x());
}

NFElement NFElement::operator-() const { return NFElement(field_, -rep_); }

NFElement operator+(const NFElement& a, const NFElement& b) {
  return NFElement(a.field_, a.rep_ + b.rep_);
}

NFElement operator-(const NFElement& a, const NFElement& b) {
  return NFElement(a.field_, a.rep_ - b.rep_);
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  return NFElement(a.field_, a.rep_ * b.rep_);
}

NFElement NFElement::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroArgument, "inverse of zero");
  if (is_rational()) return rational(field_, 1 / rep_.coeff(0));
  const Poly& m = field_->defining_poly();
  bool integral = true;
  for (const auto& c : m.coeffs()) integral = integral && c.get_den() == 1;
  if (!integral) {
    auto eg = poly_ext_gcd(rep_, m);
    return NFElement(field_, eg.s);
  }
  // Solve (A * y = 1 mod m) with fraction-free elimination on the
  // multiplication matrix of the integral numerator A.
  const int d = field_->degree();
  Integer den = 1;
  for (const auto& c : rep_.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> col(d);
  for (int i = 0; i <= rep_.degree(); ++i) col[i] = rep_.coeff(i).get_num() * (den / rep_.coeff(i).get_den());
  std::vector<std::vector<Integer>> M(d, std::vector<Integer>(d + 1));
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) M[i][j] = col[i];
    Integer top = col[d - 1];
    for (int i = d - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) mpz_submul(col[i].get_mpz_t(), top.get_mpz_t(), m.coeff(i).get_num_mpz_t());
  }
  M[0][d] = 1;
  Integer prev = 1;
  for (int k = 0; k < d; ++k) {
    int piv = k;
    while (piv < d && M[piv][k] == 0) ++piv;
    if (piv == d) fail(ErrorCode::InvalidArgument, "internal: singular multiplication matrix");
    std::swap(M[k], M[piv]);
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j <= d; ++j) {
        Integer t = M[i][j] * M[k][k];
        mpz_submul(t.get_mpz_t(), M[i][k].get_mpz_t(), M[k][j].get_mpz_t());
        mpz_divexact(M[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  std::vector<Rat> y(d);
  for (int i = d - 1; i >= 0; --i) {
    Rat acc(M[i][d]);
    for (int j = i + 1; j < d; ++j) acc -= Rat(M[i][j]) * y[j];
    y[i] = acc / Rat(M[i][i]);
  }
  Poly inv(std::move(y));
  return NFElement(field_, inv * Rat(den));
}

NFElement NFElement::pow(unsigned e) const {
  NFElement r = rational(field_, Rat(1)), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Rat NFElement::norm() const {
  if (is_zero()) return Rat(0);
  return resultant(field_->defining_poly(), rep_);
}

NFElement eval(const Poly& f, const NFElement& x) {
  NFElement acc = NFElement::rational(x.field(), Rat(0));
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * x + NFElement::rational(x.field(), f.coeff(i));
  return acc;
}

LPoly::LPoly(FieldPtr field, std::vector<NFElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

LPoly LPoly::from_rational(FieldPtr field, const Poly& f) {
  std::vector<NFElement> c;
  for (const auto& x : f.coeffs()) c.push_back(NFElement::rational(field, x));
  return LPoly(field, std::move(c));
}

void LPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

NFElement LPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return NFElement::rational(field_, Rat(0));
  return c_[i];
}

NFElement LPoly::eval(const NFElement& x) const {
  NFElement acc = NFElement::rational(field_, Rat(0));
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

LPoly LPoly::monic() const {
  if (is_zero()) return *this;
  NFElement inv = lead().inverse();
  std::vector<NFElement> c;
  for (const auto& x : c_) c.push_back(x * inv);
  return LPoly(field_, std::move(c));
}

LPoly LPoly::derivative() const {
  std::vector<NFElement> c;
  for (int i = 1; i <= degree(); ++i) c.push_back(c_[i] * NFElement::rational(field_, Rat(i)));
  return LPoly(field_, std::move(c));
}

LPoly LPoly::shift(const NFElement& a) const {
  std::vector<NFElement> v = c_;
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) v[j] = v[j] + a * v[j + 1];
  return LPoly(field_, std::move(v));
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<NFElement> c(std::max(a.c_.size(), b.c_.size()), NFElement::rational(f, Rat(0)));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
  return LPoly(f, std::move(c));
}

LPoly operator-(const LPoly& a, const LPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<NFElement> c(std::max(a.c_.size(), b.c_.size()), NFElement::rational(f, Rat(0)));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] = c[i] + a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] - b.c_[i];
  return LPoly(f, std::move(c));
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return LPoly(a.field_ ? a.field_ : b.field_, {});
  const FieldPtr& f = a.field_;
  // Accumulate products on representatives before reducing.
  std::vector<Poly> acc(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].rep() * b.c_[j].rep();
  }
  std::vector<NFElement> c;
  c.reserve(acc.size());
  for (auto& p : acc) c.emplace_back(f, std::move(p));
  return LPoly(f, std::move(c));
}

void divmod(const LPoly& a, const LPoly& b, LPoly& q, LPoly& r) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const FieldPtr& f = b.field();
  std::vector<NFElement> rc = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) {
    q = LPoly(f, {});
    r = a;
    return;
  }
  std::vector<NFElement> qc(a.degree() - db + 1, NFElement::rational(f, Rat(0)));
  NFElement inv = b.lead().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rc[i].is_zero()) continue;
    NFElement t = rc[i] * inv;
    qc[i - db] = t;
    for (int j = 0; j <= db; ++j) rc[i - db + j] = rc[i - db + j] - t * b.coeffs()[j];
  }
  rc.resize(db);
  q = LPoly(f, std::move(qc));
  r = LPoly(f, std::move(rc));
}

LPoly lgcd(const LPoly& a, const LPoly& b) {
  LPoly x = a, y = b;
  while (!y.is_zero()) {
    LPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

Poly trager_norm(const LPoly& g, const Rat& s) {
  const FieldPtr& K = g.field();
  int D = K->degree() * g.degree();
  NFElement t = NFElement::generator(K);
  std::vector<Rat> xs, ys;
  for (int x0 = 0; x0 <= D; ++x0) {
    NFElement u = NFElement::rational(K, Rat(x0)) - NFElement::rational(K, s) * t;
    xs.emplace_back(x0);
    ys.push_back(g.eval(u).norm());
  }
  return interpolate(xs, ys);
}

std::vector<TragerFactor> factor_over_field(const LPoly& g0) {
  LPoly g = g0.monic();
  const FieldPtr& K = g.field();
  std::vector<TragerFactor> out;
  if (g.degree() <= 0) return out;
  if (g.degree() == 1) {
    Poly n = trager_norm(g, Rat(0));
    out.push_back({g, n, Rat(0)});
    return out;
  }
  NFElement t = NFElement::generator(K);
  for (int k = 0;; ++k) {
    Rat s = (k % 2 ? Rat(-(k + 1) / 2) : Rat(k / 2));
    Poly n = trager_norm(g, s);
    if (!is_squarefree(n)) continue;
    for (const auto& nj : irreducible_factors(n)) {
      LPoly h = LPoly::from_rational(K, nj).shift(NFElement::rational(K, s) * t);
      LPoly gj = lgcd(g, h);
      out.push_back({gj, nj, s});
    }
    return out;
  }
}

}  // namespace mvf
