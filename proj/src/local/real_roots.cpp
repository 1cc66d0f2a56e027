#include "mvf/local/real_roots.hpp"

#include "mvf/errors.hpp"

namespace mvf {

namespace {

int sgn(const Rat& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int variations(const std::vector<Poly>& seq, const Rat& x) {
  int prev = 0, v = 0;
  for (const auto& p : seq) {
    int s = sgn(p.eval(x));
    if (s == 0) continue;
    if (prev && s != prev) ++v;
    prev = s;
  }
  return v;
}

int variations_at_infinity(const std::vector<Poly>& seq, bool positive) {
  int prev = 0, v = 0;
  for (const auto& p : seq) {
    int s = sgn(p.lead());
    if (!positive && p.degree() % 2) s = -s;
    if (prev && s != prev) ++v;
    prev = s;
  }
  return v;
}

Rat cauchy_bound(const Poly& f) {
  Rat m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rat(abs(f.coeff(i) / f.lead())));
  return m + 1;
}

// A point strictly inside (lo, hi) that is not a root of g.
Rat split_point(const Poly& g, const Rat& lo, const Rat& hi) {
  for (long den = 2;; ++den)
    for (long num = 1; num < den; ++num) {
      Rat m = lo + (hi - lo) * make_rat(num, den);
      if (g.eval(m) != 0) return m;
    }
}

void isolate(const Poly& g, const std::vector<Poly>& seq, const Rat& lo, const Rat& hi,
             int count, std::vector<RealRootInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({g, lo, hi});
    return;
  }
  Rat mid = (lo + hi) / 2;
  if (g.eval(mid) == 0) mid = split_point(g, lo, hi);
  int left = sturm_count(seq, lo, mid);
  isolate(g, seq, lo, mid, left, out);
  isolate(g, seq, mid, hi, count - left, out);
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& f) {
  std::vector<Poly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sturm_count(const std::vector<Poly>& seq, const Rat& a, const Rat& b) {
  return variations(seq, a) - variations(seq, b);
}

int count_real_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (f.degree() <= 0) return 0;
  auto seq = sturm_sequence(squarefree_part(f));
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

std::vector<RealRootInterval> isolate_real_roots(const Poly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "isolate roots of zero polynomial");
  std::vector<RealRootInterval> out;
  if (f.degree() <= 0) return out;
  Poly g = squarefree_part(f);
  auto seq = sturm_sequence(g);
  Rat b = cauchy_bound(g);
  isolate(g, seq, -b, b, sturm_count(seq, -b, b), out);
  return out;
}

RealRootInterval refine(const RealRootInterval& iv, const Rat& max_width) {
  RealRootInterval r = iv;
  auto seq = sturm_sequence(r.poly);
  while (r.hi - r.lo > max_width) {
    Rat mid = (r.lo + r.hi) / 2;
    if (r.poly.eval(mid) == 0) {
      Rat w = (r.hi - r.lo) / 8;
      r.lo = mid - w;
      r.hi = mid + w;
      continue;
    }
    if (sturm_count(seq, r.lo, mid) == 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
  return r;
}

int sign_at_root(const RealRootInterval& iv, const Poly& h0) {
  Poly h = h0 % iv.poly;
  if (h.is_zero()) return 0;
  Poly g = poly_gcd(iv.poly, h);
  if (g.degree() > 0 && sturm_count(sturm_sequence(g), iv.lo, iv.hi) == 1) return 0;
  Poly hs = squarefree_part(h);
  if (hs.degree() <= 0) return sgn(h.lead());
  auto hseq = sturm_sequence(hs);
  RealRootInterval r = iv;
  auto seq = sturm_sequence(r.poly);
  // h has no root at the isolated point, so shrinking eventually excludes
  // all roots of h from the interval.
  while (hs.eval(r.lo) == 0 || hs.eval(r.hi) == 0 || sturm_count(hseq, r.lo, r.hi) > 0) {
    Rat mid = split_point(r.poly * hs, r.lo, r.hi);
    if (sturm_count(seq, r.lo, mid) == 1)
      r.hi = mid;
    else
      r.lo = mid;
  }
  return sgn(h.eval((r.lo + r.hi) / 2));
}

}  // namespace mvf
