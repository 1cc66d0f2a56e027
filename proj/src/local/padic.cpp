#include "mvf/local/padic.hpp"

#include <algorithm>
#include <cstdlib>

#include "mvf/errors.hpp"

namespace mvf {

PrecisionOptions default_precision() {
  PrecisionOptions o;
  if (const char* env = std::getenv("MVF_PRECISION_CAP")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) o.cap = v;
  }
  return o;
}

namespace {

int64_t sat_add(int64_t a, int64_t b) {
  int64_t r = a + b;
  return std::min(r, PAdicApprox::kExact);
}

using ZVec = std::vector<Integer>;

void ztrim(ZVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer zeval(const ZVec& h, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (size_t i = h.size(); i-- > 0;) acc = mod(acc * x + h[i], m);
  return acc;
}

ZVec zderiv(const ZVec& h) {
  ZVec d;
  for (size_t i = 1; i < h.size(); ++i) d.push_back(h[i] * static_cast<unsigned long>(i));
  return d;
}

// h(r + p y) with the p-content removed.
ZVec shift_and_scale(const ZVec& h, const Integer& r, const Integer& p) {
  ZVec v = h;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = n - 1; j-- > i;) v[j] += r * v[j + 1];
  Integer pw = 1;
  for (auto& c : v) {
    c *= pw;
    pw *= p;
  }
  ztrim(v);
  while (true) {
    bool all = true;
    for (auto& c : v)
      if (!mpz_divisible_p(c.get_mpz_t(), p.get_mpz_t())) all = false;
    if (!all) break;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  }
  return v;
}

}  // namespace

std::optional<int64_t> PAdicApprox::val() const {
  if (value == 0) return std::nullopt;
  int64_t v = valuation(value, p);
  if (v < abs_prec) return v;
  return std::nullopt;
}

void PAdicApprox::normalize() {
  if (is_exact() || value == 0) return;
  int64_t v = valuation(value, p);
  if (v >= abs_prec) {
    value = 0;
    return;
  }
  Rat unit = value * rpow(Rat(p), -v);
  Integer m = ipow(p, static_cast<unsigned long>(abs_prec - v));
  Integer u = mod_rat(unit, m);
  value = Rat(u) * rpow(Rat(p), v);
}

PAdicApprox operator+(const PAdicApprox& a, const PAdicApprox& b) {
  PAdicApprox r{a.p, a.value + b.value, std::min(a.abs_prec, b.abs_prec)};
  r.normalize();
  return r;
}

PAdicApprox operator-(const PAdicApprox& a, const PAdicApprox& b) {
  PAdicApprox r{a.p, a.value - b.value, std::min(a.abs_prec, b.abs_prec)};
  r.normalize();
  return r;
}

PAdicApprox operator*(const PAdicApprox& a, const PAdicApprox& b) {
  auto lower = [](const PAdicApprox& x) {
    if (x.value == 0) return x.abs_prec;
    return std::min(valuation(x.value, x.p), x.abs_prec);
  };
  int64_t prec = std::min(sat_add(a.abs_prec, lower(b)), sat_add(b.abs_prec, lower(a)));
  if (a.is_exact() && b.is_exact()) prec = PAdicApprox::kExact;
  PAdicApprox r{a.p, a.value * b.value, prec};
  r.normalize();
  return r;
}

PAdicApprox eval(const Poly& f, const PAdicApprox& x) {
  PAdicApprox acc = PAdicApprox::exact(x.p, Rat(0));
  for (int i = f.degree(); i >= 0; --i)
    acc = acc * x + PAdicApprox::exact(x.p, f.coeff(i));
  return acc;
}

PAdicRoot::PAdicRoot(Integer p, Integer offset, int shift, std::vector<Integer> h, Integer y0,
                     Rat scale)
    : p_(std::move(p)),
      offset_(std::move(offset)),
      shift_(shift),
      h_(std::move(h)),
      y0_(std::move(y0)),
      scale_(std::move(scale)) {}

PAdicApprox PAdicRoot::approx(int64_t prec) const {
  if (h_.size() == 2 && h_[0] == 0 && offset_ == 0 && y0_ == 0)
    return PAdicApprox::exact(p_, Rat(0));
  int64_t s = valuation(scale_, p_);
  int64_t need = std::max<int64_t>(1, prec + s - shift_);
  // Newton iteration on h from the simple root y0 mod p.
  ZVec d = zderiv(h_);
  Integer y = y0_;
  int64_t have = 1;
  while (have < need) {
    have = std::min(2 * have, need);
    Integer m = ipow(p_, static_cast<unsigned long>(have));
    Integer hv = zeval(h_, y, m), dv = zeval(d, y, m);
    y = mod(y - hv * inverse_mod(dv, m), m);
  }
  Integer beta = offset_ + ipow(p_, shift_) * y;
  PAdicApprox r{p_, Rat(beta) / scale_, shift_ + need - s};
  r.normalize();
  return r;
}

std::optional<int64_t> PAdicRoot::val() const {
  for (int64_t prec = 8;; prec *= 2) {
    auto a = approx(prec);
    if (a.is_exact() && a.value == 0) return std::nullopt;
    if (auto v = a.val()) return v;
  }
}

namespace {

void search(const ZVec& h, const Integer& a, int k, const Integer& p, const Rat& scale,
            std::vector<PAdicRoot>& out) {
  Integer pk = ipow(p, k);
  ZVec d = zderiv(h);
  unsigned long pu = p.get_ui();
  for (unsigned long r = 0; r < pu; ++r) {
    Integer R(r);
    if (zeval(h, R, p) != 0) continue;
    if (zeval(d, R, p) != 0) {
      out.emplace_back(p, a, k, h, R, scale);
      continue;
    }
    search(shift_and_scale(h, R, p), a + pk * R, k + 1, p, scale, out);
  }
}

}  // namespace

std::vector<PAdicRoot> padic_roots(const Poly& f, const Integer& p) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of zero polynomial");
  if (!p.fits_ulong_p() || !is_prime(p)) fail(ErrorCode::InvalidArgument, "bad prime");
  std::vector<PAdicRoot> out;
  if (f.degree() <= 0) return out;
  Poly g = squarefree_part(f);
  bool zero_root = g.coeff(0) == 0;
  if (zero_root) g = g / Poly::x();
  if (zero_root) out.emplace_back(p, Integer(0), 0, ZVec{Integer(0), Integer(1)}, Integer(0), Rat(1));
  if (g.degree() <= 0) return out;
  auto mi = make_monic_integral(g);
  ZVec h = primitive_integer_form(mi.poly).prim;
  std::vector<PAdicRoot> rest;
  search(h, Integer(0), 0, p, mi.scale, rest);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool has_padic_root(const Poly& f, const Integer& p) { return !padic_roots(f, p).empty(); }

bool unit_is_nth_power(const Integer& u, unsigned n, const Integer& p) {
  if (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t()))
    fail(ErrorCode::InvalidArgument, "not a unit");
  Integer N(n);
  int64_t vn = mpz_divisible_p(N.get_mpz_t(), p.get_mpz_t()) ? valuation(N, p) : 0;
  if (vn == 0 && p != 2) {
    Integer pm1 = p - 1, g, e, r;
    mpz_gcd(g.get_mpz_t(), pm1.get_mpz_t(), N.get_mpz_t());
    e = pm1 / g;
    Integer um = mod(u, p);
    mpz_powm(r.get_mpz_t(), um.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r == 1;
  }
  Integer m = ipow(p, static_cast<unsigned long>(2 * vn + 1));
  Integer target = mod(u, m);
  for (Integer y = 1; y < m; ++y) {
    if (mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) continue;
    Integer t;
    mpz_powm_ui(t.get_mpz_t(), y.get_mpz_t(), n, m.get_mpz_t());
    if (t == target) return true;
  }
  return false;
}

std::optional<bool> is_nth_power(const PAdicApprox& x, unsigned n) {
  auto v = x.val();
  if (!v) return std::nullopt;
  long ln = static_cast<long>(n);
  if (((*v % ln) + ln) % ln != 0) return false;
  Integer N(n);
  int64_t vn = mpz_divisible_p(N.get_mpz_t(), x.p.get_mpz_t()) ? valuation(N, x.p) : 0;
  int64_t k = 2 * vn + 1;
  if (x.abs_prec < *v + k) return std::nullopt;
  Rat unit = x.value * rpow(Rat(x.p), -*v);
  return unit_is_nth_power(mod_rat(unit, ipow(x.p, static_cast<unsigned long>(k))), n, x.p);
}

bool nth_power_in_Qp(const Rat& x, unsigned n, const Integer& p) {
  if (x == 0) fail(ErrorCode::ZeroArgument, "n-th power test of zero");
  if (n == 0) fail(ErrorCode::InvalidArgument, "n must be positive");
  return *is_nth_power(PAdicApprox::exact(p, x), n);
}

}  // namespace mvf
