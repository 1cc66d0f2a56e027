#include "mvf/exact/modpoly.hpp"

#include <algorithm>

#include "mvf/errors.hpp"

namespace mvf::modp {

void trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

MPoly add(const MPoly& a, const MPoly& b, uint64_t p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  trim(r);
  return r;
}

MPoly sub(const MPoly& a, const MPoly& b, uint64_t p) {
  MPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

MPoly mul(const MPoly& a, const MPoly& b, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

MPoly scale(const MPoly& a, uint64_t s, uint64_t p) {
  MPoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s % p;
  trim(r);
  return r;
}

uint64_t inv(uint64_t a, uint64_t p) {
  int64_t t = 0, nt = 1, r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
  while (nr) {
    int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) fail(ErrorCode::InvalidArgument, "not invertible mod p");
  return static_cast<uint64_t>(t < 0 ? t + static_cast<int64_t>(p) : t);
}

void divmod(const MPoly& a, const MPoly& b, uint64_t p, MPoly& q, MPoly& r) {
  if (b.empty()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial mod p");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  size_t db = b.size() - 1;
  q.assign(r.size() - db, 0);
  uint64_t li = inv(b.back(), p);
  for (size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    uint64_t t = r[i] * li % p;
    q[i - db] = t;
    for (size_t j = 0; j <= db; ++j) r[i - db + j] = (r[i - db + j] + p - t * b[j] % p) % p;
  }
  r.resize(db);
  trim(r);
  trim(q);
}

MPoly rem(const MPoly& a, const MPoly& b, uint64_t p) {
  MPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

MPoly monic(const MPoly& a, uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

MPoly gcd(const MPoly& a, const MPoly& b, uint64_t p) {
  MPoly x = a, y = b;
  trim(x);
  trim(y);
  while (!y.empty()) {
    MPoly r = rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x, p);
}

MPoly derivative(const MPoly& a, uint64_t p) {
  if (a.size() <= 1) return {};
  MPoly r(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

MPoly powmod(const MPoly& base, const Integer& e, const MPoly& m, uint64_t p) {
  MPoly r{1};
  r = rem(r, m, p);
  MPoly b = rem(base, m, p);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = rem(mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, b, p), m, p);
  }
  return r;
}

uint64_t eval(const MPoly& a, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (size_t i = a.size(); i-- > 0;) acc = (acc * x + a[i]) % p;
  return acc;
}

MPoly reduce(const std::vector<Integer>& a, uint64_t p) {
  MPoly r(a.size());
  Integer pp(static_cast<unsigned long>(p));
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod(a[i], pp).get_ui();
  trim(r);
  return r;
}

bool is_squarefree(const MPoly& f, uint64_t p) {
  MPoly d = derivative(f, p);
  if (d.empty()) return f.size() <= 1;
  return gcd(f, d, p).size() == 1;
}

namespace {

// Basis of the kernel of (Q - I), where row i of Q is x^{ip} mod f.
std::vector<MPoly> berlekamp_kernel(const MPoly& f, uint64_t p) {
  size_t n = f.size() - 1;
  std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
  MPoly xp = powmod(MPoly{0, 1}, Integer(static_cast<unsigned long>(p)), f, p);
  MPoly row{1};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < row.size(); ++j) m[j][i] = row[j];
    m[i][i] = (m[i][i] + p - 1) % p;
    row = rem(mul(row, xp, p), f, p);
  }
  // m is (Q - I)^T: columns indexed by i. Kernel of v -> m v.
  std::vector<int> pivot_col(n, -1);
  std::vector<bool> is_pivot(n, false);
  size_t rank = 0;
  for (size_t c = 0; c < n && rank < n; ++c) {
    size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    uint64_t li = inv(m[rank][c], p);
    for (auto& x : m[rank]) x = x * li % p;
    for (size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      uint64_t t = m[r][c];
      for (size_t k = 0; k < n; ++k) m[r][k] = (m[r][k] + p - t * m[rank][k] % p) % p;
    }
    pivot_col[rank] = static_cast<int>(c);
    is_pivot[c] = true;
    ++rank;
  }
  std::vector<MPoly> basis;
  for (size_t fc = 0; fc < n; ++fc) {
    if (is_pivot[fc]) continue;
    MPoly v(n, 0);
    v[fc] = 1;
    for (size_t r = 0; r < rank; ++r) v[pivot_col[r]] = (p - m[r][fc]) % p;
    trim(v);
    basis.push_back(v);
  }
  return basis;
}

}  // namespace

int berlekamp_count(const MPoly& f, uint64_t p) {
  if (f.size() <= 2) return f.size() == 2 ? 1 : 0;
  return static_cast<int>(berlekamp_kernel(f, p).size());
}

std::vector<MPoly> berlekamp_factor(const MPoly& f0, uint64_t p) {
  MPoly f = monic(f0, p);
  if (f.size() <= 2) return {f};
  auto basis = berlekamp_kernel(f, p);
  size_t r = basis.size();
  std::vector<MPoly> factors{f};
  for (const auto& v : basis) {
    if (factors.size() == r) break;
    if (v.size() <= 1) continue;
    for (uint64_t c = 0; c < p && factors.size() < r; ++c) {
      MPoly vc = v;
      vc[0] = (vc[0] + p - c) % p;
      trim(vc);
      std::vector<MPoly> next;
      for (const auto& u : factors) {
        if (u.size() <= 2) {
          next.push_back(u);
          continue;
        }
        MPoly g = gcd(u, vc, p);
        if (g.size() > 1 && g.size() < u.size()) {
          MPoly q, rr;
          divmod(u, g, p, q, rr);
          next.push_back(g);
          next.push_back(monic(q, p));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  std::sort(factors.begin(), factors.end(), [](const MPoly& a, const MPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return factors;
}

}  // namespace mvf::modp
