#include <map>

#include "mvf/chain/chain.hpp"
#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"

namespace mvf {

namespace {

QFFormula at(Atom a) { return QFFormula::atom(std::move(a)); }

// psi(b): chi(b) and (sqrt b > 0 xor v(sqrt b - 1/2) > 0), base (RCF, ACVF).
Sentence psi_sentence(const Rat& b) {
  Poly one = Poly::constant(1);
  QFFormula chi = QFFormula::conj({at(Atom::gt(0, Poly::constant(b))),
                                   at(Atom::val_gt(1, Poly::constant(b - Rat(1, 4)), one))});
  QFFormula phi1 = at(Atom::gt(0, Poly::x()));
  QFFormula phi2 = at(Atom::val_gt(1, Poly::x() - Poly::constant(Rat(1, 2)), one));
  return Sentence{Poly::x() * Poly::x() - Poly::constant(b),
                  QFFormula::conj({chi, QFFormula::exclusive_or(phi1, phi2)})};
}

}  // namespace

ShatterReport ip_shatter_demo(int m, long p) {
  if (m < 1 || m > 3) fail(ErrorCode::PreconditionViolated, "shattering demo supports 1 <= m <= 3");
  if (!is_prime(Integer(p))) fail(ErrorCode::InvalidArgument, "p must be prime");
  BaseStructure base{{PlaceSpec::rcf(), PlaceSpec::acvf(p)}};
  ShatterReport r;
  r.m = m;
  r.prime = p;
  r.epsilon = infinitesimal(base, Rat(1, 100), 2);
  std::vector<Rat> b;
  Poly gen = Poly::constant(1);
  for (int j = 1; j <= m; ++j) {
    Rat a = Rat(1, 4) + Rat(p * j);
    r.a_values.push_back(a);
    b.push_back(a + r.epsilon);
    if (!(b.back() > 0 && valuation(b.back() - Rat(1, 4), Integer(p)) > 0))
      fail(ErrorCode::InvalidArgument, "internal: a_j + eps outside chi");
    gen = gen * (Poly::x() * Poly::x() - Poly::constant(b.back()));
  }
  ClosurePtr L = GaloisClosure::build(gen);
  r.closure_degree = L->degree();
  if (r.closure_degree != (1 << m))
    fail(ErrorCode::InvalidArgument, "square roots of a_j + eps are not independent");
  ContextPtr ctx = ChainContext::create(base, L);

  StateGraph g = explore(*ctx);
  std::vector<State> maximal;
  for (const auto& s : g.states)
    if (is_maximal(*ctx, s)) maximal.push_back(s);
  r.maximal_states = static_cast<int>(maximal.size());

  std::vector<std::vector<bool>> truth;
  for (int j = 0; j < m; ++j) truth.push_back(eval_states(*ctx, maximal, SentenceExpr::leaf(psi_sentence(b[j]))));
  std::map<State, unsigned> subset_of;
  std::map<unsigned, ShatterState> first;
  for (size_t k = 0; k < maximal.size(); ++k) {
    unsigned S = 0;
    for (int j = 0; j < m; ++j)
      if (truth[j][k]) S |= 1u << j;
    subset_of[maximal[k]] = S;
    if (!first.count(S)) first[S] = {S, ctx->describe(maximal[k])};
  }
  for (auto& [S, st] : first) r.realized.push_back(st);

  // sigma_S swaps the square roots of b_j exactly for j in S.
  const auto& roots = L->roots();
  std::vector<int> root_of(m, -1);
  for (int j = 0; j < m; ++j)
    for (size_t k = 0; k < roots.size() && root_of[j] < 0; ++k)
      if ((roots[k] * roots[k]).is_rational() && (roots[k] * roots[k]).rational_value() == b[j])
        root_of[j] = static_cast<int>(k);
  std::map<unsigned, int> sigma;
  for (int g2 = 0; g2 < L->order(); ++g2) {
    unsigned S = 0;
    for (int j = 0; j < m; ++j)
      if (L->permutations()[g2][root_of[j]] != root_of[j]) S |= 1u << j;
    sigma[S] = g2;
  }
  r.twists_consistent = sigma.size() == (size_t(1) << m) && !maximal.empty();
  if (r.twists_consistent) {
    const State& base_state = maximal.front();
    unsigned S0 = subset_of[base_state];
    for (const auto& [S, g2] : sigma) {
      State t = base_state;
      Mask o = 0;
      for (int x = 0; x < ctx->places(0).count(); ++x)
        if (base_state.orbits[0] >> x & 1) o |= Mask(1) << ctx->places(0).act(g2, x);
      t.orbits[0] = o;
      auto it = subset_of.find(t);
      if (!ctx->is_valid(t) || it == subset_of.end() || it->second != (S0 ^ S)) r.twists_consistent = false;
    }
  }
  return r;
}

}  // namespace mvf
