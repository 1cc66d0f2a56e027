#include "mvf/galois/fixed_field.hpp"

#include "mvf/errors.hpp"

namespace mvf {

namespace {

std::vector<NFElement> orbit(const GaloisClosure& c, const NFElement& x) {
  std::vector<NFElement> out;
  for (int g = 0; g < c.order(); ++g) {
    NFElement y = c.apply(g, x);
    bool seen = false;
    for (const auto& z : out)
      if (z == y) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(y);
  }
  return out;
}

NFElement relative_trace(const GaloisClosure& c, Mask h, const NFElement& x) {
  NFElement s = NFElement::rational(c.field(), Rat(0));
  for (int g : c.members(h)) s = s + c.apply(g, x);
  return s;
}

NFElement relative_norm(const GaloisClosure& c, Mask h, const NFElement& x) {
  NFElement s = NFElement::rational(c.field(), Rat(1));
  for (int g : c.members(h)) s = s * c.apply(g, x);
  return s;
}

}  // namespace

FixedField::FixedField(ClosurePtr closure, Mask h) : closure_(std::move(closure)), h_(h) {
  const GaloisClosure& c = *closure_;
  if (!c.is_subgroup(h)) fail(ErrorCode::InvalidArgument, "not a subgroup");
  const FieldPtr& L = c.field();
  int target = c.order() / popcount(h);
  NFElement theta = NFElement::generator(L);
  std::vector<NFElement> cands;
  cands.push_back(relative_trace(c, h, theta));
  NFElement t2 = relative_trace(c, h, theta * theta);
  cands.push_back(t2);
  for (int k = 1; k <= 6; ++k)
    cands.push_back(cands[0] + NFElement::rational(L, Rat(k)) * t2);
  for (int k = 1; k <= 40; ++k)
    cands.push_back(relative_norm(c, h, theta + NFElement::rational(L, Rat(k))));
  std::vector<NFElement> conj;
  bool ok = false;
  for (const auto& cand : cands) {
    conj = orbit(c, cand);
    if (static_cast<int>(conj.size()) == target) {
      eta_ = cand;
      ok = true;
      break;
    }
  }
  if (!ok) fail(ErrorCode::InvalidArgument, "internal: no primitive element for fixed field");
  // Minimal polynomial from the conjugates.
  std::vector<NFElement> prod{NFElement::rational(L, Rat(1))};
  for (const auto& r : conj) {
    std::vector<NFElement> next(prod.size() + 1, NFElement::rational(L, Rat(0)));
    for (size_t i = 0; i < prod.size(); ++i) {
      next[i + 1] = next[i + 1] + prod[i];
      next[i] = next[i] - r * prod[i];
    }
    prod = std::move(next);
  }
  std::vector<Rat> mc;
  for (const auto& x : prod) {
    if (!x.is_rational()) fail(ErrorCode::InvalidArgument, "internal: fixed field minpoly not rational");
    mc.push_back(x.rational_value());
  }
  minpoly_ = Poly(mc);

  // Linear algebra for express(): coordinates of eta^k, pick pivot rows.
  const int d = c.degree(), r = target;
  NFElement pw = NFElement::rational(L, Rat(1));
  for (int k = 0; k < r; ++k) {
    std::vector<Rat> col(d);
    for (int i = 0; i < d; ++i) col[i] = pw.rep().coeff(i);
    powers_.push_back(col);
    pw = pw * eta_;
  }
  // Gauss-Jordan on B^T rows to find independent rows of B (= d x r).
  std::vector<std::vector<Rat>> work(d, std::vector<Rat>(r));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < r; ++k) work[i][k] = powers_[k][i];
  std::vector<std::vector<Rat>> basis;  // reduced rows
  std::vector<int> lead;
  for (int i = 0; i < d && static_cast<int>(pivot_rows_.size()) < r; ++i) {
    std::vector<Rat> row = work[i];
    for (size_t b = 0; b < basis.size(); ++b)
      if (row[lead[b]] != 0) {
        Rat f = row[lead[b]];
        for (int k = 0; k < r; ++k) row[k] -= f * basis[b][k];
      }
    int l = -1;
    for (int k = 0; k < r; ++k)
      if (row[k] != 0) {
        l = k;
        break;
      }
    if (l < 0) continue;
    Rat inv = 1 / row[l];
    for (auto& x : row) x *= inv;
    for (size_t b = 0; b < basis.size(); ++b)
      if (basis[b][l] != 0) {
        Rat f = basis[b][l];
        for (int k = 0; k < r; ++k) basis[b][k] -= f * row[k];
      }
    basis.push_back(row);
    lead.push_back(l);
    pivot_rows_.push_back(i);
  }
  if (static_cast<int>(pivot_rows_.size()) != r)
    fail(ErrorCode::InvalidArgument, "internal: powers of primitive element dependent");
  // Invert the r x r submatrix S = B[pivot_rows].
  std::vector<std::vector<Rat>> a(r, std::vector<Rat>(2 * r));
  for (int i = 0; i < r; ++i) {
    for (int k = 0; k < r; ++k) a[i][k] = powers_[k][pivot_rows_[i]];
    a[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    Rat inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int i = 0; i < r; ++i)
      if (i != col && a[i][col] != 0) {
        Rat f = a[i][col];
        for (int k = 0; k < 2 * r; ++k) a[i][k] -= f * a[col][k];
      }
  }
  inverse_.assign(r, std::vector<Rat>(r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) inverse_[i][k] = a[i][r + k];
}

bool FixedField::contains(const NFElement& z) const {
  for (int g : closure_->members(h_))
    if (!(closure_->apply(g, z) == z)) return false;
  return true;
}

Poly FixedField::express(const NFElement& z) const {
  const int r = degree(), d = closure_->degree();
  std::vector<Rat> coef(r);
  for (int i = 0; i < r; ++i) {
    Rat s = 0;
    for (int k = 0; k < r; ++k) s += inverse_[i][k] * z.rep().coeff(pivot_rows_[k]);
    coef[i] = s;
  }
  for (int row = 0; row < d; ++row) {
    Rat s = 0;
    for (int k = 0; k < r; ++k) s += coef[k] * powers_[k][row];
    if (s != z.rep().coeff(row))
      fail(ErrorCode::InvalidArgument, "element is not in the fixed field");
  }
  return Poly(coef);
}

}  // namespace mvf
