#include "mvf/exact/poly.hpp"

#include <algorithm>
#include <sstream>

#include "mvf/errors.hpp"

namespace mvf {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::monomial(const Rat& c, int deg) {
  std::vector<Rat> v(deg + 1);
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rat> v;
  for (long c : coeffs) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[i];
}

Rat Poly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  Rat inv = 1 / lead();
  for (auto& c : r.c_) c *= inv;
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * g + Poly::constant(*it);
  return acc;
}

Poly Poly::shift(const Rat& a) const {
  // Taylor shift by repeated synthetic division.
  std::vector<Rat> v = c_;
  int n = static_cast<int>(v.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) v[j] += a * v[j + 1];
  return Poly(std::move(v));
}

Poly Poly::scale_arg(const Rat& c) const {
  std::vector<Rat> v = c_;
  Rat pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

namespace {

// Numerators over a common denominator.
Integer clear_denominators(const std::vector<Rat>& c, std::vector<Integer>& num) {
  Integer den = 1;
  for (const auto& x : c)
    if (x.get_den() != 1) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  num.resize(c.size());
  for (size_t i = 0; i < c.size(); ++i) {
    if (den == 1) num[i] = c[i].get_num();
    else num[i] = c[i].get_num() * (den / c[i].get_den());
  }
  return den;
}

std::vector<Rat> over(std::vector<Integer>& num, const Integer& den) {
  std::vector<Rat> r(num.size());
  for (size_t i = 0; i < num.size(); ++i) {
    r[i] = Rat(num[i], den);
    if (den != 1) r[i].canonicalize();
  }
  return r;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Integer> an, bn;
  Integer da = clear_denominators(a.c_, an);
  Integer db = clear_denominators(b.c_, bn);
  std::vector<Integer> r(an.size() + bn.size() - 1);
  for (size_t i = 0; i < an.size(); ++i) {
    if (an[i] == 0) continue;
    for (size_t j = 0; j < bn.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), an[i].get_mpz_t(), bn[j].get_mpz_t());
  }
  Integer d = da * db;
  return Poly(over(r, d));
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) os << mvf::to_string(a);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Poly(), a};
  int db = b.degree();
  if ((b.lead() == 1 || b.lead() == -1) &&
      std::all_of(b.coeffs().begin(), b.coeffs().end(),
                  [](const Rat& x) { return x.get_den() == 1; })) {
    std::vector<Integer> rn;
    Integer den = clear_denominators(a.coeffs(), rn);
    std::vector<Integer> qn(a.degree() - db + 1);
    const bool neg = b.lead() == -1;
    for (int i = a.degree(); i >= db; --i) {
      if (rn[i] == 0) continue;
      Integer t = neg ? Integer(-rn[i]) : rn[i];
      qn[i - db] = t;
      for (int j = 0; j <= db; ++j)
        mpz_submul(rn[i - db + j].get_mpz_t(), t.get_mpz_t(), b.coeffs()[j].get_num_mpz_t());
    }
    rn.resize(db);
    return {Poly(over(qn, den)), Poly(over(rn, den))};
  }
  std::vector<Rat> r = a.coeffs();
  std::vector<Rat> q(a.degree() - db + 1);
  Rat inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rat t = r[i] * inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly pow(const Poly& a, unsigned e) {
  Poly r = Poly::constant(1), b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

ExtGcd poly_ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rat inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rat resultant(const Poly& a0, const Poly& b0) {
  if (a0.is_zero() || b0.is_zero()) return Rat(0);
  // Euclidean: Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r).
  Poly a = a0, b = b0;
  Rat acc = 1;
  while (true) {
    int da = a.degree(), db = b.degree();
    if (db == 0) {
      return acc * rpow(b.lead(), da);
    }
    if (da < db) {
      if ((da * db) % 2) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Poly r = a % b;
    if (r.is_zero()) return Rat(0);
    if ((da * db) % 2) acc = -acc;
    acc *= rpow(b.lead(), da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Rat discriminant(const Poly& f) {
  int n = f.degree();
  if (n < 1) fail(ErrorCode::InvalidArgument, "discriminant of a constant");
  Rat r = resultant(f, f.derivative()) / f.lead();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (f.degree() <= 0) return Poly::constant(1);
  return (f / poly_gcd(f, f.derivative())).monic();
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, f.derivative()).degree() <= 0;
}

std::vector<Poly> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<Poly> out;
  if (f.degree() <= 0) return out;
  Poly fm = f.monic();
  Poly a = poly_gcd(fm, fm.derivative());
  Poly b = fm / a;
  Poly c = fm.derivative() / a;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    Poly g = poly_gcd(b, d);
    out.push_back(g);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntegerForm primitive_integer_form(const Poly& f) {
  if (f.is_zero()) return {Rat(0), {}};
  Integer l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> v;
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    Integer n = c.get_num() * (l / c.get_den());
    v.push_back(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (f.lead() < 0) g = -g;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return {make_rat(g, l), v};
}

Poly from_integers(const std::vector<Integer>& c) {
  std::vector<Rat> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

MonicIntegral make_monic_integral(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "monic integral form of zero");
  auto form = primitive_integer_form(f);
  const auto& a = form.prim;
  int n = static_cast<int>(a.size()) - 1;
  Integer lc = a[n];
  // F(y) = lc^{n-1} f(y/lc) / content is monic integral with roots lc*alpha.
  std::vector<Rat> v(n + 1);
  Integer pw = 1;
  for (int i = n; i >= 0; --i) {
    v[i] = Rat(a[i] * pw);
    if (i < n) pw *= lc;
  }
  // v[i] currently a_i lc^{n-1-i} for i<n, and v[n] = a_n; fix leading to 1.
  v[n] = 1;
  return {Poly(std::move(v)), Rat(lc)};
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly r = Poly::constant(dd[n - 1]);
  for (size_t k = n - 1; k-- > 0;) r = r * Poly{-xs[k], Rat(1)} + Poly::constant(dd[k]);
  return r;
}

}  // namespace mvf
