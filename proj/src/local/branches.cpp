#include "mvf/local/branches.hpp"

#include <algorithm>
#include <numeric>

#include "mvf/errors.hpp"

namespace mvf {

namespace {

// Size of the orbit of the residue of a unit u under D: |D| divided by the
// number of d with w(d(u) - u) > 0 (D preserves the base place).
int residue_orbit_size(const PlaceSet& ps, const NFElement& u) {
  const GaloisClosure& c = *ps.closure();
  auto dm = c.members(ps.decomposition());
  int fixed = 0;
  for (int d : dm) {
    if (d == 0) {
      ++fixed;
      continue;
    }
    NFElement diff = c.apply(d, u) - u;
    if (diff.is_zero() || ps.in_maximal_ideal(0, diff)) ++fixed;
  }
  return static_cast<int>(dm.size()) / fixed;
}

NFElement power(const NFElement& z, long e) {
  if (e >= 0) return z.pow(static_cast<unsigned>(e));
  return z.inverse().pow(static_cast<unsigned>(-e));
}

}  // namespace

Ramification certify_ramification(const PlaceSet& ps) {
  const GaloisClosure& c = *ps.closure();
  const FieldPtr& L = c.field();
  const int n = popcount(ps.decomposition());
  Ramification r;
  if (n == 1) return r;
  const Integer& p = ps.prime();
  const long pl = p.get_si();
  auto dm = c.members(ps.decomposition());
  auto rat = [&](const Rat& x) { return NFElement::rational(L, x); };

  // Uniformizer candidate pi with w(pi) = 1/E, residue generator t of
  // degree ft. Elements are expanded digit by digit: u = z / pi^k is a
  // unit and u - rho has positive valuation for the right residue rho.
  long E = 1;
  NFElement pi = rat(Rat(p));
  NFElement t = rat(Rat(1));
  int ft = 1;
  long f_lcm = 1;
  std::vector<NFElement> residues;
  auto rebuild_residues = [&]() {
    residues.clear();
    long count = 1;
    for (int i = 0; i < ft; ++i) count *= pl;
    if (count > 256) {
      for (long a = 0; a < pl; ++a) residues.push_back(rat(Rat(a)));
      return;
    }
    for (long code = 0; code < count; ++code) {
      NFElement s = rat(Rat(0)), pw = rat(Rat(1));
      long k = code;
      for (int i = 0; i < ft; ++i) {
        s = s + rat(Rat(k % pl)) * pw;
        k /= pl;
        pw = pw * t;
      }
      residues.push_back(s);
    }
  };
  rebuild_residues();

  std::vector<NFElement> queue{NFElement::generator(L)};
  for (const auto& root : c.roots()) queue.push_back(root);
  for (int d : dm)
    if (d != 0) queue.push_back(c.apply(d, NFElement::generator(L)) - NFElement::generator(L));

  auto done = [&]() { return E * f_lcm == n && ft == f_lcm; };
  for (size_t qi = 0; qi < queue.size() && qi < 400 && !done(); ++qi) {
    const NFElement& z = queue[qi];
    if (z.is_zero()) continue;
    Rat v = ps.valuation(0, z).value;
    long b = v.get_den().get_si();
    if (E % b != 0) {
      long E2 = std::lcm(E, b);
      long a = v.get_num().get_si();
      bool ok = false;
      for (long x = 0; x < E2 && !ok; ++x)
        for (long y = 0; y < E2 && !ok; ++y) {
          long num = (((x * a % E2) * (E2 / b) + y * (E2 / E)) % E2 + E2) % E2;
          if (num != 1) continue;
          Rat val = Rat(x) * v + make_rat(Integer(y), Integer(E));
          Integer k = floor_rat(val);
          pi = power(z, x) * power(pi, y) * rat(rpow(Rat(p), -k.get_si()));
          ok = true;
        }
      E = E2;
    }
    Rat vE = v * Rat(E);
    long k = vE.get_num().get_si();
    NFElement u = z * power(pi, -k);
    int deg = residue_orbit_size(ps, u);
    f_lcm = std::lcm(f_lcm, static_cast<long>(deg));
    if (deg > ft) {
      t = u;
      ft = deg;
      rebuild_residues();
    } else if (deg < ft && std::lcm(static_cast<long>(deg), static_cast<long>(ft)) > ft) {
      for (long s = 1; s <= 4; ++s) {
        NFElement w = t + rat(Rat(s)) * u;
        if (w.is_zero() || ps.valuation(0, w).value != 0) continue;
        int dw = residue_orbit_size(ps, w);
        if (dw > ft) {
          t = w;
          ft = dw;
          rebuild_residues();
          break;
        }
      }
    }
    if (done()) break;
    for (const auto& rho : residues) {
      NFElement s = u - rho;
      if (!s.is_zero() && ps.in_maximal_ideal(0, s)) {
        queue.push_back(s);
        break;
      }
    }
  }
  if (!done())
    fail(ErrorCode::UnsupportedRamification,
         "could not certify ramification above " + p.get_str());
  r.e = static_cast<int>(E);
  r.f = ft;
  Mask inertia = 0;
  for (int d : dm) {
    NFElement diff = c.apply(d, t) - t;
    if (diff.is_zero() || ps.in_maximal_ideal(0, diff)) inertia |= Mask(1) << d;
  }
  if (popcount(inertia) != r.e || !c.is_subgroup(inertia))
    fail(ErrorCode::UnsupportedRamification, "inertia group certificate failed");
  r.inertia = inertia;
  return r;
}

std::vector<PAdicBranch> hensel_branches(const Poly& f, const Integer& p, int k) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "branches of the zero polynomial");
  if (!is_squarefree(f)) fail(ErrorCode::PreconditionViolated, "polynomial is not squarefree");
  if (k < 1) fail(ErrorCode::InvalidArgument, "precision must be positive");
  std::vector<PAdicBranch> out;
  if (f.degree() < 1) return out;
  auto closure = GaloisClosure::build(f);
  auto ps = PlaceSet::above(closure, p);
  const GaloisClosure& c = *closure;
  Ramification ram = certify_ramification(*ps);
  auto dm = c.members(ps->decomposition());
  const auto& roots = c.roots();
  std::vector<bool> done(roots.size(), false);
  for (size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    PAdicBranch b;
    b.prime = p;
    b.factor = c.root_factor()[i];
    b.poly = c.generator_factors()[b.factor];
    b.precision = k;
    b.places = ps;
    Mask orbit_stab = 0;
    for (int d : dm) {
      int j = c.permutations()[d][i];
      if (!done[j]) {
        done[j] = true;
        b.roots.push_back(j);
      }
      if (j == static_cast<int>(i)) orbit_stab |= Mask(1) << d;
    }
    std::sort(b.roots.begin(), b.roots.end());
    int e_branch = popcount(ram.inertia) / popcount(ram.inertia & orbit_stab);
    b.ram_index = e_branch;
    b.res_degree = b.degree() / e_branch;
    // Local factor prod (x - r) over the orbit; coefficients lie in Fix(D).
    std::vector<NFElement> prod{NFElement::rational(c.field(), Rat(1))};
    for (int j : b.roots) {
      std::vector<NFElement> nx(prod.size() + 1, NFElement::rational(c.field(), Rat(0)));
      for (size_t t = 0; t < prod.size(); ++t) {
        nx[t + 1] = nx[t + 1] + prod[t];
        nx[t] = nx[t] - roots[j] * prod[t];
      }
      prod = std::move(nx);
    }
    for (const auto& coef : prod) b.local_factor.push_back(ps->embed(0, coef, k));
    if (b.degree() == 1) b.approx_root = ps->embed(0, roots[b.roots[0]], k);
    out.push_back(std::move(b));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PAdicBranch& a, const PAdicBranch& b) { return a.factor < b.factor; });
  return out;
}

ExtValue value_at(const PAdicBranch& branch, const NFElement& elem) {
  if (elem.field()->defining_poly() != branch.poly)
    fail(ErrorCode::FieldMismatch, "element does not live on the branch's field");
  const GaloisClosure& c = *branch.places->closure();
  NFElement z = eval(elem.rep(), c.roots()[branch.roots.front()]);
  return branch.places->valuation(0, z);
}

int sign_at(const RealRootInterval& iv, const NFElement& elem) {
  if (elem.field()->defining_poly() != iv.poly.monic())
    fail(ErrorCode::FieldMismatch, "element does not live on the interval's field");
  return sign_at_root(iv, elem.rep());
}

PlaceDatum PlaceDatum::rational_real() {
  return {Poly::x(), RealRootInterval{Poly::x(), Rat(-1), Rat(1)}, std::nullopt};
}

PlaceDatum PlaceDatum::rational_padic(const Integer& p) {
  auto bs = hensel_branches(Poly::x(), p, 1);
  return {Poly::x(), std::nullopt, bs.front()};
}

bool same_topology(const PlaceDatum& a, const PlaceDatum& b) {
  if (a.field_poly != b.field_poly) fail(ErrorCode::FieldMismatch, "places on different fields");
  if (a.interval.has_value() != b.interval.has_value()) return false;
  if (a.interval) {
    Rat lo = std::max(a.interval->lo, b.interval->lo), hi = std::min(a.interval->hi, b.interval->hi);
    if (!(lo < hi)) return false;
    if (a.interval->poly.eval(lo) == 0 || a.interval->poly.eval(hi) == 0) return true;
    return sturm_count(sturm_sequence(a.interval->poly), lo, hi) > 0;
  }
  if (a.branch->prime != b.branch->prime) return false;
  return a.branch->factor == b.branch->factor && a.branch->roots == b.branch->roots;
}

}  // namespace mvf
