#include "mvf/exact/factor.hpp"

#include <algorithm>
#include <tuple>

#include "mvf/errors.hpp"
#include "mvf/exact/modpoly.hpp"

namespace mvf {

namespace {

using ZVec = std::vector<Integer>;

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZVec zmul(const ZVec& a, const ZVec& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZVec r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& x : r) x = mod(x, m);
  ztrim(r);
  return r;
}

ZVec zadd(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  for (auto& x : r) x = mod(x, m);
  ztrim(r);
  return r;
}

ZVec zsub(const ZVec& a, const ZVec& b, const Integer& m) {
  ZVec nb = b;
  for (auto& x : nb) x = -x;
  return zadd(a, nb, m);
}

// Division by a monic b modulo m.
void zdivmod(const ZVec& a, const ZVec& b, const Integer& m, ZVec& q, ZVec& r) {
  r = a;
  for (auto& x : r) x = mod(x, m);
  ztrim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  size_t db = b.size() - 1;
  q.assign(r.size() - db, Integer(0));
  for (size_t i = r.size(); i-- > db;) {
    Integer t = mod(r[i], m);
    if (t == 0) continue;
    q[i - db] = t;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = mod(r[i - db + j], m);
  }
  r.resize(db);
  ztrim(r);
  ztrim(q);
}

ZVec from_mpoly(const modp::MPoly& a) {
  ZVec r;
  for (auto c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic;
// returns the same relations mod m^2.
void hensel_step(const ZVec& f, ZVec& g, ZVec& h, ZVec& s, ZVec& t, const Integer& m2) {
  ZVec e = zsub(f, zmul(g, h, m2), m2);
  ZVec q, r;
  zdivmod(zmul(s, e, m2), h, m2, q, r);
  ZVec gs = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZVec hs = zadd(h, r, m2);
  ZVec one{Integer(1)};
  ZVec b = zsub(zadd(zmul(s, gs, m2), zmul(t, hs, m2), m2), one, m2);
  ZVec c, d;
  zdivmod(zmul(s, b, m2), hs, m2, c, d);
  s = zsub(s, d, m2);
  t = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, gs, m2), m2);
  g = std::move(gs);
  h = std::move(hs);
}

// Lifts f = lc(f) * prod(factors) mod p to mod p^k (p^k = target).
// Factors monic mod p; returns monic lifts.
std::vector<ZVec> multi_lift(const ZVec& f, const std::vector<modp::MPoly>& factors,
                             uint64_t p, unsigned k) {
  Integer P(static_cast<unsigned long>(p));
  Integer target = ipow(P, k);
  if (factors.size() == 1) {
    Integer li = inverse_mod(f.back(), target);
    ZVec r = f;
    for (auto& x : r) x = mod(x * li, target);
    return {r};
  }
  size_t half = factors.size() / 2;
  std::vector<modp::MPoly> left(factors.begin(), factors.begin() + half);
  std::vector<modp::MPoly> right(factors.begin() + half, factors.end());
  modp::MPoly g0{mod(f.back(), P).get_ui()}, h0{1};
  for (const auto& u : left) g0 = modp::mul(g0, u, p);
  for (const auto& u : right) h0 = modp::mul(h0, u, p);
  // Extended gcd mod p: s g0 + t h0 = 1.
  modp::MPoly r0 = g0, r1 = h0, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    modp::MPoly q, r;
    modp::divmod(r0, r1, p, q, r);
    r0 = r1;
    r1 = r;
    modp::MPoly s2 = modp::sub(s0, modp::mul(q, s1, p), p);
    s0 = s1;
    s1 = s2;
    modp::MPoly t2 = modp::sub(t0, modp::mul(q, t1, p), p);
    t0 = t1;
    t1 = t2;
  }
  uint64_t ci = modp::inv(r0[0], p);
  ZVec g = from_mpoly(g0), h = from_mpoly(h0);
  ZVec s = from_mpoly(modp::scale(s0, ci, p)), t = from_mpoly(modp::scale(t0, ci, p));
  Integer m = P;
  while (m < target) {
    Integer m2 = m * m;
    if (m2 > target) m2 = target;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  for (auto& x : g) x = mod(x, target);
  ztrim(g);
  auto a = multi_lift(g, left, p, k);
  auto b = multi_lift(h, right, p, k);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Integer symmetric(const Integer& x, const Integer& m) {
  Integer r = mod(x, m);
  if (2 * r > m) r -= m;
  return r;
}

// Exact division of integer polynomials; false if not divisible.
bool zdivides(const ZVec& a, const ZVec& b, ZVec& q) {
  ZVec r = a;
  size_t db = b.size() - 1;
  if (r.size() < b.size()) return false;
  q.assign(r.size() - db, Integer(0));
  for (size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer t = r[i] / b.back();
    q[i - db] = t;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  for (size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  return true;
}

ZVec primitive(ZVec a) {
  Integer g = 0;
  for (auto& x : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return a;
}

std::vector<unsigned long> small_primes(unsigned long limit) {
  std::vector<unsigned long> ps;
  for (unsigned long n = 3; n < limit; n += 2) {
    bool pr = true;
    for (auto q : ps) {
      if (q * q > n) break;
      if (n % q == 0) {
        pr = false;
        break;
      }
    }
    if (pr) ps.push_back(n);
  }
  return ps;
}

// f primitive, squarefree, degree >= 1, positive leading coefficient.
std::vector<ZVec> zassenhaus(const ZVec& f) {
  int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return {f};
  static const std::vector<unsigned long> primes = small_primes(4000);
  uint64_t best_p = 0;
  int best_r = 1 << 30, good = 0;
  Integer lc = f.back();
  for (auto p : primes) {
    if (mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    modp::MPoly fp = modp::monic(modp::reduce(f, p), p);
    if (!modp::is_squarefree(fp, p)) continue;
    int r = modp::berlekamp_count(fp, p);
    if (r < best_r) {
      best_r = r;
      best_p = p;
    }
    if (r == 1 || ++good >= 8) break;
  }
  if (best_p == 0) fail(ErrorCode::InvalidArgument, "no good reduction prime found");
  if (best_r == 1) return {f};
  uint64_t p = best_p;
  auto modfactors = modp::berlekamp_factor(modp::reduce(f, p), p);
  // Factor coefficient bound: 2^n * ||f||_2 * |lc|, lift beyond twice it.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer nrm;
  mpz_sqrt(nrm.get_mpz_t(), norm2.get_mpz_t());
  nrm += 1;
  Integer bound = 2 * ipow(Integer(2), n) * nrm * abs(lc) + 1;
  Integer P(static_cast<unsigned long>(p));
  unsigned k = 1;
  Integer pk = P;
  while (pk <= bound) {
    pk *= P;
    ++k;
  }
  auto lifted = multi_lift(f, modfactors, p, k);
  std::vector<ZVec> result;
  ZVec F = f;
  std::vector<ZVec> rest = lifted;
  size_t sub = 1;
  while (2 * sub <= rest.size()) {
    bool found = false;
    size_t r = rest.size();
    std::vector<size_t> idx(sub);
    for (size_t i = 0; i < sub; ++i) idx[i] = i;
    while (true) {
      Integer L = F.back();
      ZVec g{mod(L, pk)};
      for (auto i : idx) g = zmul(g, rest[i], pk);
      for (auto& x : g) x = symmetric(x, pk);
      ztrim(g);
      ZVec gp = primitive(g);
      ZVec q;
      if (zdivides(F, gp, q)) {
        result.push_back(gp);
        F = q;
        std::vector<ZVec> nr;
        for (size_t i = 0, j = 0; i < r; ++i) {
          if (j < sub && idx[j] == i) {
            ++j;
            continue;
          }
          nr.push_back(rest[i]);
        }
        rest = std::move(nr);
        found = true;
        break;
      }
      // next combination
      int pos = static_cast<int>(sub) - 1;
      while (pos >= 0 && idx[pos] == r - sub + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t j = pos + 1; j < sub; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++sub;
  }
  result.push_back(primitive(F));
  return result;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

Poly FactorList::expand() const {
  Poly r = Poly::constant(unit);
  for (const auto& [f, m] : factors) r = r * pow(f, m);
  return r;
}

std::vector<Poly> irreducible_factors(const Poly& f, const FactorOptions& opt) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factor of zero polynomial");
  if (f.degree() <= 0) return {};
  if (f.degree() > opt.degree_cap)
    fail(ErrorCode::DegreeCapExceeded,
         "factorization degree " + std::to_string(f.degree()) + " exceeds cap " +
             std::to_string(opt.degree_cap));
  // Strip powers of x first: they are trivially linear.
  std::vector<Poly> out;
  Poly g = f;
  int z = 0;
  while (g.coeff(0) == 0) {
    g = g / Poly::x();
    ++z;
  }
  if (z) out.push_back(Poly::x());
  if (g.degree() > 0) {
    auto form = primitive_integer_form(g);
    for (auto& h : zassenhaus(form.prim)) out.push_back(from_integers(h).monic());
  }
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

FactorList factor_over_Q(const Poly& f, const FactorOptions& opt) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factor of zero polynomial");
  FactorList out{f.lead(), {}};
  auto parts = squarefree_decomposition(f);
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].degree() <= 0) continue;
    for (auto& g : irreducible_factors(parts[i], opt))
      out.factors.emplace_back(g, static_cast<int>(i + 1));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  auto fl = factor_over_Q(f);
  return fl.factors.size() == 1 && fl.factors[0].second == 1;
}

std::vector<Rat> rational_roots(const Poly& f) {
  std::vector<Rat> roots;
  for (auto& g : irreducible_factors(squarefree_part(f)))
    if (g.degree() == 1) roots.push_back(-g.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace mvf
