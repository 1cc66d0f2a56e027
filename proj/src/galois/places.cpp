#include "mvf/galois/places.hpp"

#include <algorithm>
#include <set>

#include "mvf/errors.hpp"
#include "mvf/exact/modpoly.hpp"

namespace mvf {

namespace {

// Subgroups in search order, skipping whole conjugacy classes once one
// member has been rejected.
template <class Pred>
Mask first_subgroup(const GaloisClosure& c, const std::vector<Mask>& candidates, Pred ok) {
  std::set<Mask> rejected;
  for (Mask h : candidates) {
    if (rejected.count(h)) continue;
    if (ok(h)) return h;
    for (int g = 0; g < c.order(); ++g) rejected.insert(c.conjugate(g, h));
  }
  fail(ErrorCode::InvalidArgument, "internal: no decomposition group found");
}

}  // namespace

std::shared_ptr<const PlaceSet> PlaceSet::archimedean(ClosurePtr closure) {
  auto s = std::shared_ptr<PlaceSet>(new PlaceSet);
  s->closure_ = closure;
  const GaloisClosure& c = *closure;
  std::vector<Mask> cands{Mask(1)};
  for (int g = 1; g < c.order(); ++g)
    if (c.element_order(g) == 2) cands.push_back(Mask(1) | (Mask(1) << g));
  s->d_ = first_subgroup(c, cands, [&](Mask h) {
    if (h == 1) return count_real_roots(c.field()->defining_poly()) > 0;
    FixedField z(closure, h);
    return count_real_roots(z.minpoly()) > 0;
  });
  s->z_ = std::make_shared<FixedField>(closure, s->d_);
  s->interval_ = isolate_real_roots(s->z_->minpoly()).front();
  s->build_cosets();
  return s;
}

std::shared_ptr<const PlaceSet> PlaceSet::above(ClosurePtr closure, const Integer& p,
                                                const PrecisionOptions& prec) {
  if (!p.fits_ulong_p() || !is_prime(p)) fail(ErrorCode::InvalidArgument, "not a prime: " + p.get_str());
  auto s = std::shared_ptr<PlaceSet>(new PlaceSet);
  s->closure_ = closure;
  s->prime_ = p;
  s->prec_ = prec;
  const GaloisClosure& c = *closure;
  const Poly& m = c.field()->defining_poly();
  auto has_root = [&](Mask h) {
    if (h == 1) return has_padic_root(m, p);
    FixedField z(closure, h);
    return has_padic_root(z.minpoly(), p);
  };
  std::vector<Mask> cands;
  uint64_t pu = p.get_ui();
  auto mp = modp::reduce(primitive_integer_form(m).prim, pu);
  if (m.degree() >= 1 && modp::is_squarefree(mp, pu)) {
    // Unramified: D is cyclic, generated by a Frobenius of order f.
    int f = static_cast<int>(modp::berlekamp_factor(mp, pu).front().size()) - 1;
    for (Mask h : c.subgroups()) {
      if (popcount(h) != f) continue;
      bool cyclic = false;
      for (int g : c.members(h))
        if (c.element_order(g) == f) cyclic = true;
      if (cyclic) cands.push_back(h);
    }
  } else {
    cands = c.subgroups();
  }
  s->d_ = first_subgroup(c, cands, has_root);
  s->z_ = std::make_shared<FixedField>(closure, s->d_);
  s->root_ = padic_roots(s->z_->minpoly(), p).front();
  s->build_cosets();
  return s;
}

void PlaceSet::build_cosets() {
  const GaloisClosure& c = *closure_;
  int n = c.order();
  coset_of_.assign(n, -1);
  auto dm = c.members(d_);
  for (int g = 0; g < n; ++g) {
    if (coset_of_[g] >= 0) continue;
    int x = static_cast<int>(reps_.size());
    reps_.push_back(g);
    for (int d : dm) coset_of_[c.mul(g, d)] = x;
  }
  int k = count();
  action_.assign(n * k, 0);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < k; ++x) action_[g * k + x] = coset_of_[c.mul(g, reps_[x])];
  for (int x = 0; x < k; ++x) stab_.push_back(c.conjugate(reps_[x], d_));
}

Mask PlaceSet::orbit(Mask h, int x) const {
  Mask o = Mask(1) << x;
  auto hm = closure_->members(h);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int y = 0; y < count(); ++y) {
      if (!(o >> y & 1)) continue;
      for (int g : hm) {
        int z = act(g, y);
        if (!(o >> z & 1)) {
          o |= Mask(1) << z;
          grew = true;
        }
      }
    }
  }
  return o;
}

int PlaceSet::sign(int x, const NFElement& z) const {
  if (!is_archimedean()) fail(ErrorCode::InvalidArgument, "sign at a non-archimedean place");
  if (z.is_zero()) return 0;
  NFElement zz = closure_->apply(closure_->inv(reps_[x]), z);
  return sign_at_root(*interval_, z_->express(zz));
}

ExtValue PlaceSet::valuation(int x, const NFElement& z) const {
  if (is_archimedean()) fail(ErrorCode::InvalidArgument, "valuation at an archimedean place");
  if (z.is_zero()) return ExtValue::inf();
  const GaloisClosure& c = *closure_;
  NFElement zz = c.apply(c.inv(reps_[x]), z);
  NFElement norm = zz;
  for (int d : c.members(d_))
    if (d != 0) norm = norm * c.apply(d, zz);
  Poly q = z_->express(norm);
  int local_degree = popcount(d_);
  for (int64_t prec = prec_.initial;; prec *= 2) {
    PAdicApprox a = eval(q, root_->approx(prec));
    if (auto v = a.val()) return ExtValue::of(make_rat(Integer(*v), Integer(local_degree)));
    if (prec >= prec_.cap)
      fail(ErrorCode::PrecisionExhausted,
           "valuation undecided at precision cap " + std::to_string(prec_.cap));
  }
}

PAdicApprox PlaceSet::embed(int x, const NFElement& z, int64_t prec) const {
  if (is_archimedean()) fail(ErrorCode::InvalidArgument, "p-adic image at an archimedean place");
  NFElement zz = closure_->apply(closure_->inv(reps_[x]), z);
  Poly q = z_->express(zz);
  for (int64_t work = std::max(prec, prec_.initial);; work *= 2) {
    PAdicApprox a = eval(q, root_->approx(work));
    if (a.abs_prec >= prec) return a;
    if (work >= 4 * std::max(prec, prec_.cap))
      fail(ErrorCode::PrecisionExhausted, "p-adic image undecided at precision cap");
  }
}

bool PlaceSet::nth_power(int x, const NFElement& z, unsigned n) const {
  if (z.is_zero()) return true;
  NFElement zz = closure_->apply(closure_->inv(reps_[x]), z);
  Poly q = z_->express(zz);
  for (int64_t prec = prec_.initial;; prec *= 2) {
    PAdicApprox a = eval(q, root_->approx(prec));
    if (auto r = is_nth_power(a, n)) return *r;
    if (prec >= prec_.cap)
      fail(ErrorCode::PrecisionExhausted, "power predicate undecided at precision cap");
  }
}

bool PlaceSet::in_maximal_ideal(int x, const NFElement& z) const {
  return valuation(x, z) > ExtValue::of(Rat(0));
}

std::vector<int> conjugation_involutions(ClosurePtr closure) {
  auto arch = PlaceSet::archimedean(closure);
  std::set<int> out;
  for (int x = 0; x < arch->count(); ++x) {
    auto m = closure->members(arch->stabilizer(x));
    out.insert(m.back());
  }
  return {out.begin(), out.end()};
}

}  // namespace mvf
