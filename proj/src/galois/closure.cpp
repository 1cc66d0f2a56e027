#include "mvf/galois/closure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mvf/errors.hpp"
#include "mvf/exact/factor.hpp"

namespace mvf {

int popcount(Mask m) { return __builtin_popcountll(m); }

namespace {

struct Pending {
  int factor;
  LPoly rest;
};

NFElement map_element(const NFElement& z, const NFElement& image_of_t) {
  return eval(z.rep(), image_of_t);
}

LPoly map_poly(const LPoly& g, const FieldPtr& K2, const NFElement& image_of_t) {
  std::vector<NFElement> c;
  for (const auto& x : g.coeffs()) c.push_back(map_element(x, image_of_t));
  return LPoly(K2, std::move(c));
}

}  // namespace

ClosurePtr GaloisClosure::build(const Poly& f0, const ClosureOptions& opt) {
  if (opt.degree_cap < 1 || opt.degree_cap > 64)
    fail(ErrorCode::InvalidArgument, "closure degree cap must lie in 1..64");
  if (f0.is_zero()) fail(ErrorCode::ZeroPolynomial, "closure of the zero polynomial");
  auto c = std::shared_ptr<GaloisClosure>(new GaloisClosure);
  Poly f = f0.degree() > 0 ? squarefree_part(f0) : Poly::constant(1);
  c->generator_ = f;
  Rat scale = 1;
  std::vector<Poly> gfactors;
  if (f.degree() > 0) {
    auto mi = make_monic_integral(f);
    scale = mi.scale;
    gfactors = irreducible_factors(mi.poly);
    for (const auto& g : gfactors)
      c->factors_.push_back((g.scale_arg(scale) * rpow(scale, -g.degree())).monic());
  }

  FieldPtr K = NumberField::create(Poly::x(), true);
  std::vector<NFElement> roots;
  std::vector<int> rfac;
  std::vector<Rat> coef;
  std::vector<Pending> pending;
  for (size_t j = 0; j < gfactors.size(); ++j) {
    const Poly& g = gfactors[j];
    if (g.degree() == 1) {
      roots.push_back(NFElement::rational(K, -g.coeff(0)));
      rfac.push_back(static_cast<int>(j));
      coef.emplace_back(0);
    } else {
      pending.push_back({static_cast<int>(j), LPoly::from_rational(K, g)});
    }
  }

  while (!pending.empty()) {
    Pending& pd = pending.front();
    std::vector<TragerFactor> tf;
    if (K->degree() == 1)
      tf.push_back({pd.rest, gfactors[pd.factor], Rat(0)});
    else
      tf = factor_over_field(pd.rest);
    LPoly rest = LPoly::from_rational(K, Poly::constant(1));
    int chosen = -1;
    for (size_t i = 0; i < tf.size(); ++i) {
      const LPoly& h = tf[i].factor;
      if (h.degree() == 1) {
        roots.push_back(-h.coeff(0));
        rfac.push_back(pd.factor);
        coef.emplace_back(0);
      } else {
        rest = rest * h;
        if (chosen < 0) chosen = static_cast<int>(i);
      }
    }
    if (chosen < 0) {
      pending.erase(pending.begin());
      continue;
    }
    const TragerFactor& h = tf[chosen];
    if (h.norm.degree() > opt.degree_cap)
      fail(ErrorCode::DegreeCapExceeded, "splitting field degree exceeds " +
                                             std::to_string(opt.degree_cap));
    FieldPtr K2 = NumberField::create(h.norm, true);
    NFElement beta = NFElement::generator(K2);
    NFElement timg = NFElement::rational(K2, Rat(0));
    if (K->degree() > 1) {
      // The old generator is the common root of m_K(y) and h(beta - s y, y).
      LPoly lin(K2, {beta, NFElement::rational(K2, -h.shift)});
      LPoly acc(K2, {});
      LPoly pw = LPoly::from_rational(K2, Poly::constant(1));
      for (int k = 0; k <= h.factor.degree(); ++k) {
        acc = acc + LPoly::from_rational(K2, h.factor.coeff(k).rep()) * pw;
        pw = pw * lin;
      }
      LPoly g = lgcd(acc, LPoly::from_rational(K2, K->defining_poly()));
      if (g.degree() != 1)
        fail(ErrorCode::InvalidArgument, "field embedding not unique during closure build");
      timg = -g.coeff(0);
    }
    for (auto& r : roots) r = map_element(r, timg);
    for (size_t i = 1; i < pending.size(); ++i)
      pending[i].rest = map_poly(pending[i].rest, K2, timg);
    NFElement alpha = beta - NFElement::rational(K2, h.shift) * timg;
    LPoly q, r;
    divmod(map_poly(rest, K2, timg), LPoly(K2, {-alpha, NFElement::rational(K2, Rat(1))}), q, r);
    for (auto& x : coef) x *= h.shift;
    roots.push_back(alpha);
    rfac.push_back(pd.factor);
    coef.emplace_back(1);
    K = K2;
    if (q.degree() <= 0)
      pending.erase(pending.begin());
    else
      pending.front().rest = q;
  }

  // Roots of f itself, grouped by factor.
  std::vector<size_t> order(roots.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return rfac[a] < rfac[b]; });
  NFElement theta = NFElement::rational(K, Rat(0));
  for (size_t i : order) {
    NFElement root = roots[i] * NFElement::rational(K, 1 / scale);
    c->roots_.push_back(root);
    c->root_factor_.push_back(rfac[i]);
    c->theta_coef_.push_back(coef[i] * scale);
    theta = theta + NFElement::rational(K, coef[i] * scale) * root;
  }
  if (K->degree() > 1 && !(theta == NFElement::generator(K)))
    fail(ErrorCode::InvalidArgument, "internal: generator bookkeeping mismatch");
  c->field_ = K;
  c->finish();
  return c;
}

void GaloisClosure::finish() {
  const int d = degree();
  const Poly& m = field_->defining_poly();
  const int nr = static_cast<int>(roots_.size());
  std::vector<int> adjoined;
  for (int j = 0; j < nr; ++j)
    if (theta_coef_[j] != 0) adjoined.push_back(j);

  struct Auto {
    std::vector<int> perm;
    std::vector<Poly> powers;
  };
  std::vector<Auto> autos;
  std::vector<int> assign(adjoined.size());
  std::vector<bool> used(nr, false);

  auto try_candidate = [&]() {
    NFElement cimg = NFElement::rational(field_, Rat(0));
    for (size_t a = 0; a < adjoined.size(); ++a)
      cimg = cimg + NFElement::rational(field_, theta_coef_[adjoined[a]]) * roots_[assign[a]];
    if (d > 1 && !eval(m, cimg).is_zero()) return;
    if (d == 1) cimg = NFElement::rational(field_, Rat(0));
    Auto au;
    NFElement pw = NFElement::rational(field_, Rat(1));
    for (int k = 0; k < d; ++k) {
      au.powers.push_back(pw.rep());
      pw = pw * cimg;
    }
    for (int j = 0; j < nr; ++j) {
      Poly img;
      const Poly& rep = roots_[j].rep();
      for (int k = 0; k <= rep.degree(); ++k) img += au.powers[k] * rep.coeff(k);
      int found = -1;
      for (int i = 0; i < nr; ++i)
        if (roots_[i].rep() == img) found = i;
      if (found < 0) fail(ErrorCode::InvalidArgument, "internal: automorphism does not permute roots");
      au.perm.push_back(found);
    }
    autos.push_back(std::move(au));
  };

  auto rec = [&](auto&& self, size_t a) -> void {
    if (a == adjoined.size()) {
      try_candidate();
      return;
    }
    for (int i = 0; i < nr; ++i) {
      if (used[i] || root_factor_[i] != root_factor_[adjoined[a]]) continue;
      used[i] = true;
      assign[a] = i;
      self(self, a + 1);
      used[i] = false;
    }
  };
  rec(rec, 0);

  if (static_cast<int>(autos.size()) != d)
    fail(ErrorCode::InvalidArgument, "internal: found " + std::to_string(autos.size()) +
                                         " automorphisms for a field of degree " +
                                         std::to_string(d));
  std::sort(autos.begin(), autos.end(),
            [](const Auto& a, const Auto& b) { return a.perm < b.perm; });
  perms_.clear();
  actions_.clear();
  for (auto& a : autos) {
    perms_.push_back(a.perm);
    Action act;
    act.den = 1;
    for (const auto& pw : a.powers)
      for (const auto& x : pw.coeffs())
        mpz_lcm(act.den.get_mpz_t(), act.den.get_mpz_t(), x.get_den_mpz_t());
    act.num.assign(static_cast<size_t>(d) * d, Integer(0));
    for (int k = 0; k < d; ++k)
      for (int i = 0; i <= a.powers[k].degree(); ++i) {
        const Rat& x = a.powers[k].coeff(i);
        act.num[k * d + i] = x.get_num() * (act.den / x.get_den());
      }
    actions_.push_back(std::move(act));
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < d; ++i) index[perms_[i]] = i;
  mul_.assign(d * d, 0);
  inv_.assign(d, 0);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      std::vector<int> comp(nr);
      for (int j = 0; j < nr; ++j) comp[j] = perms_[a][perms_[b][j]];
      mul_[a * d + b] = index.at(comp);
      if (mul_[a * d + b] == 0) inv_[a] = b;
    }

  // Subgroup lattice: cyclic subgroups, closed under joins.
  std::vector<Mask> subs;
  auto add = [&](Mask h) {
    if (std::find(subs.begin(), subs.end(), h) == subs.end()) subs.push_back(h);
  };
  for (int g = 0; g < d; ++g) add(generate(Mask(1) << g));
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(generate(subs[i] | subs[j]));
  std::sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  subgroups_ = std::move(subs);
}

int GaloisClosure::element_order(int a) const {
  int k = 1, x = a;
  while (x != 0) {
    x = mul(a, x);
    ++k;
  }
  return k;
}

NFElement GaloisClosure::apply(int g, const NFElement& x) const {
  const Poly& rep = x.rep();
  if (rep.degree() <= 0) return x;
  const int d = degree();
  const Action& act = actions_[g];
  Integer xden = 1;
  for (const auto& c : rep.coeffs()) mpz_lcm(xden.get_mpz_t(), xden.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> y(d);
  Integer xk;
  for (int k = 0; k <= rep.degree(); ++k) {
    const Rat& c = rep.coeff(k);
    if (c == 0) continue;
    xk = c.get_num() * (xden / c.get_den());
    const Integer* col = &act.num[static_cast<size_t>(k) * d];
    for (int i = 0; i < d; ++i)
      if (col[i] != 0) mpz_addmul(y[i].get_mpz_t(), col[i].get_mpz_t(), xk.get_mpz_t());
  }
  Integer den = xden * act.den;
  std::vector<Rat> out(d);
  for (int i = 0; i < d; ++i) {
    out[i] = Rat(y[i], den);
    out[i].canonicalize();
  }
  return NFElement(field_, Poly(std::move(out)));
}

bool GaloisClosure::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Mask GaloisClosure::full_mask() const {
  return order() == 64 ? ~Mask(0) : (Mask(1) << order()) - 1;
}

Mask GaloisClosure::generate(Mask parts) const {
  Mask h = parts | 1;
  std::vector<int> elems;
  for (int g = 0; g < order(); ++g)
    if (h >> g & 1) elems.push_back(g);
  std::vector<int> gens = elems;
  for (size_t i = 0; i < elems.size(); ++i)
    for (int s : gens) {
      int x = mul(elems[i], s);
      if (!(h >> x & 1)) {
        h |= Mask(1) << x;
        elems.push_back(x);
      }
    }
  return h;
}

Mask GaloisClosure::conjugate(int g, Mask h) const {
  Mask r = 0;
  int gi = inv(g);
  for (int x = 0; x < order(); ++x)
    if (h >> x & 1) r |= Mask(1) << mul(mul(g, x), gi);
  return r;
}

bool GaloisClosure::is_subgroup(Mask h) const {
  if (!(h & 1)) return false;
  if (h & ~full_mask()) return false;
  return generate(h) == h;
}

std::vector<int> GaloisClosure::members(Mask h) const {
  std::vector<int> r;
  for (int g = 0; g < order(); ++g)
    if (h >> g & 1) r.push_back(g);
  return r;
}

std::vector<NFElement> GaloisClosure::roots_of(const Poly& f) const {
  std::vector<NFElement> out;
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  if (f.degree() <= 0) return out;
  for (const auto& g : irreducible_factors(squarefree_part(f))) {
    if (g.degree() == 1) {
      out.push_back(NFElement::rational(field_, -g.coeff(0)));
      continue;
    }
    std::vector<NFElement> found;
    for (const auto& r : roots_)
      if (eval(g, r).is_zero()) found.push_back(r);
    if (static_cast<int>(found.size()) < g.degree() && degree() >= g.degree()) {
      found.clear();
      for (const auto& t : factor_over_field(LPoly::from_rational(field_, g)))
        if (t.factor.degree() == 1) found.push_back(-t.factor.coeff(0));
    }
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

std::vector<NFElement> GaloisClosure::roots_in_fixed_field(const Poly& f, Mask h) const {
  std::vector<NFElement> out;
  for (const auto& r : roots_of(f)) {
    bool fixed = true;
    for (int g : members(h))
      if (!(apply(g, r) == r)) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(r);
  }
  return out;
}

bool GaloisClosure::contains_splitting_field(const Poly& f) const {
  if (f.degree() <= 0) return true;
  return static_cast<int>(roots_of(f).size()) == squarefree_part(f).degree();
}

ClosurePtr GaloisClosure::relabeled(int g) const {
  auto c = std::shared_ptr<GaloisClosure>(new GaloisClosure);
  c->field_ = field_;
  c->generator_ = generator_;
  c->factors_ = factors_;
  const auto& p = perms_.at(g);
  for (size_t k = 0; k < roots_.size(); ++k) {
    c->roots_.push_back(roots_[p[k]]);
    c->root_factor_.push_back(root_factor_[p[k]]);
    c->theta_coef_.push_back(theta_coef_[p[k]]);
  }
  c->finish();
  return c;
}

std::string GaloisClosure::describe_element(int g) const {
  const auto& p = perms_.at(g);
  std::vector<bool> seen(p.size(), false);
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << " ";
      os << j;
      first = false;
      j = p[j];
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace mvf
