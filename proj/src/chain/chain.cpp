#include "mvf/chain/chain.hpp"

#include <omp.h>

#include <exception>
#include <random>
#include <set>

#include "mvf/chain/kernels.hpp"
#include "mvf/errors.hpp"
#include "mvf/galois/number_field.hpp"

namespace mvf {

Distribution step(const ChainContext& ctx, const State& s, Kernel k) {
  StepCounts counts = k == Kernel::Serial ? step_counts_serial(ctx, s) : step_counts_parallel(ctx, s);
  Integer total = 1;
  for (int i = 0; i < ctx.size(); ++i) total *= popcount(s.h);
  Distribution d;
  for (const auto& [t, c] : counts) d[t] = make_rat(c, total);
  return d;
}

bool is_maximal(const ChainContext& ctx, const State& s) {
  const auto& c = *ctx.closure();
  for (Mask k : c.subgroups()) {
    if ((k & s.h) != k || k == s.h) continue;
    bool extends = true;
    for (int i = 0; i < ctx.size() && extends; ++i) {
      bool found = false;
      for (int y = 0; y < ctx.places(i).count() && !found; ++y)
        if (s.orbits[i] >> y & 1) {
          Mask g = ctx.local_group(i, y);
          found = (g & k) == g;
        }
      extends = found;
    }
    if (extends) return false;
  }
  return true;
}

StateGraph explore(const ChainContext& ctx, Kernel k) {
  StateGraph g;
  std::set<State> seen;
  std::vector<State> todo{ctx.initial_state()};
  seen.insert(todo[0]);
  while (!todo.empty()) {
    State s = todo.back();
    todo.pop_back();
    Distribution d = step(ctx, s, k);
    for (const auto& [t, w] : d)
      if (seen.insert(t).second) todo.push_back(t);
    g.transitions.emplace(s, std::move(d));
  }
  g.states.assign(seen.begin(), seen.end());
  return g;
}

Distribution limit_distribution(const StateGraph& g, const State& start) {
  // Successors other than s itself have a strictly smaller group, so
  // ascending order visits them first.
  std::map<State, Distribution> absorb;
  for (const State& s : g.states) {
    const Distribution& d = g.transitions.at(s);
    Rat stay = 0;
    if (auto it = d.find(s); it != d.end()) stay = it->second;
    Distribution a;
    if (stay == 1) {
      a[s] = 1;
    } else {
      Rat scale = 1 / (1 - stay);
      for (const auto& [t, w] : d) {
        if (t == s) continue;
        for (const auto& [u, x] : absorb.at(t)) a[u] += w * x * scale;
      }
    }
    absorb.emplace(s, std::move(a));
  }
  return absorb.at(start);
}

Distribution limit_distribution(const ChainContext& ctx, Kernel k) {
  StateGraph g = explore(ctx, k);
  return limit_distribution(g, ctx.initial_state());
}

namespace {

bool eval_atom(const ChainContext& ctx, const State& s, const Atom& a, const NFElement& y) {
  NFElement v1 = eval(a.t1, y);
  switch (a.kind) {
    case Atom::Kind::Zero: return v1.is_zero();
    case Atom::Kind::Nonzero: return !v1.is_zero();
    default: break;
  }
  const PlaceSet& ps = ctx.places(a.index);
  int x = ctx.representative(s, a.index);
  switch (a.kind) {
    case Atom::Kind::Gt: return ps.sign(x, v1) > 0;
    case Atom::Kind::ValGe: return ps.valuation(x, v1) >= ps.valuation(x, eval(a.t2, y));
    case Atom::Kind::ValGt: return ps.valuation(x, v1) > ps.valuation(x, eval(a.t2, y));
    case Atom::Kind::NthPower: return ps.nth_power(x, v1, a.n);
    default: break;
  }
  return false;
}

bool eval_qf(const ChainContext& ctx, const State& s, const QFFormula& f, const NFElement& y) {
  switch (f.op()) {
    case QFFormula::Op::True: return true;
    case QFFormula::Op::False: return false;
    case QFFormula::Op::Atom: return eval_atom(ctx, s, f.atom_value(), y);
    case QFFormula::Op::Not: return !eval_qf(ctx, s, f.children()[0], y);
    case QFFormula::Op::And:
      for (const auto& k : f.children())
        if (!eval_qf(ctx, s, k, y)) return false;
      return true;
    case QFFormula::Op::Or:
      for (const auto& k : f.children())
        if (eval_qf(ctx, s, k, y)) return true;
      return false;
  }
  return false;
}

bool eval_leaf(const ChainContext& ctx, const State& s, const Sentence& sentence) {
  for (const auto& y : ctx.closure()->roots_in_fixed_field(sentence.witness, s.h))
    if (eval_qf(ctx, s, sentence.psi, y)) return true;
  return false;
}

bool eval_tree(const ChainContext& ctx, const State& s, const SentenceExpr& e) {
  switch (e.op()) {
    case SentenceExpr::Op::Leaf: return eval_leaf(ctx, s, e.sentence());
    case SentenceExpr::Op::Not: return !eval_tree(ctx, s, e.children()[0]);
    case SentenceExpr::Op::And:
      return eval_tree(ctx, s, e.children()[0]) && eval_tree(ctx, s, e.children()[1]);
    case SentenceExpr::Op::Or:
      return eval_tree(ctx, s, e.children()[0]) || eval_tree(ctx, s, e.children()[1]);
  }
  return false;
}

void require_split(const ChainContext& ctx, const SentenceExpr& e) {
  if (e.op() == SentenceExpr::Op::Leaf) {
    if (!ctx.closure()->contains_splitting_field(e.sentence().witness))
      fail(ErrorCode::ClosureTooSmall,
           "closure does not split " + e.sentence().witness.to_string("y"));
    return;
  }
  for (const auto& k : e.children()) require_split(ctx, k);
}

}  // namespace

bool eval_sentence(const ChainContext& ctx, const State& s, const Sentence& sentence) {
  return eval_expr(ctx, s, SentenceExpr::leaf(sentence));
}

bool eval_expr(const ChainContext& ctx, const State& s, const SentenceExpr& e) {
  e.validate(ctx.base());
  require_split(ctx, e);
  if (!is_maximal(ctx, s)) fail(ErrorCode::PreconditionViolated, "sentence evaluated at a non-maximal state");
  return eval_tree(ctx, s, e);
}

std::vector<bool> eval_states(const ChainContext& ctx, const std::vector<State>& states,
                              const SentenceExpr& e, Kernel k) {
  e.validate(ctx.base());
  require_split(ctx, e);
  const int64_t n = static_cast<int64_t>(states.size());
  std::vector<char> out(n, 0);
  if (k == Kernel::Serial) {
    for (int64_t i = 0; i < n; ++i) out[i] = eval_tree(ctx, states[i], e);
  } else {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (int64_t i = 0; i < n; ++i) {
      try {
        out[i] = eval_tree(ctx, states[i], e);
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
  }
  return std::vector<bool>(out.begin(), out.end());
}

MeasureResult measure(const SentenceExpr& e, const ContextPtr& ctx, const Distribution& limit) {
  e.validate(ctx->base());
  require_split(*ctx, e);
  MeasureResult r;
  r.limit = limit;
  std::vector<State> states;
  for (const auto& [s, w] : limit) states.push_back(s);
  r.truth = eval_states(*ctx, states, e);
  r.value = 0;
  size_t i = 0;
  for (const auto& [s, w] : limit)
    if (r.truth[i++]) r.value += w;
  return r;
}

MeasureResult measure(const SentenceExpr& e, const ContextPtr& ctx) {
  e.validate(ctx->base());
  require_split(*ctx, e);
  return measure(e, ctx, limit_distribution(*ctx));
}

MeasureResult measure(const Sentence& s, const ContextPtr& ctx) {
  return measure(SentenceExpr::leaf(s), ctx);
}

Rat measure(const Sentence& s, const BaseStructure& base) {
  s.validate(base);
  auto ctx = ChainContext::create(base, GaloisClosure::build(squarefree_part(s.witness)));
  return measure(s, ctx).value;
}

namespace {

// Uniform index below m from 64-bit draws, rejecting the biased tail.
int uniform_below(std::mt19937_64& rng, int m) {
  const uint64_t um = static_cast<uint64_t>(m);
  const uint64_t limit = (~uint64_t(0) / um) * um;
  uint64_t r;
  do r = rng();
  while (r >= limit);
  return static_cast<int>(r % um);
}

}  // namespace

State sample_chain(const ChainContext& ctx, uint64_t seed, int max_steps) {
  std::mt19937_64 rng(seed);
  State s = ctx.initial_state();
  std::vector<int> sigma(ctx.size());
  for (int k = 0; k <= max_steps; ++k) {
    if (is_maximal(ctx, s)) return s;
    if (k == max_steps) break;
    auto hm = ctx.closure()->members(s.h);
    for (int i = 0; i < ctx.size(); ++i) sigma[i] = hm[uniform_below(rng, static_cast<int>(hm.size()))];
    s = ctx.successor(s, sigma);
  }
  fail(ErrorCode::MaxStepsExceeded, "no absorbing state within " + std::to_string(max_steps) + " steps");
}

std::map<State, int64_t> sample_frequencies(const ChainContext& ctx, uint64_t seed, int samples,
                                            int max_steps) {
  std::map<State, int64_t> merged;
  std::exception_ptr err;
#pragma omp parallel
  {
    std::map<State, int64_t> local;
#pragma omp for schedule(static)
    for (int k = 0; k < samples; ++k) {
      try {
        local[sample_chain(ctx, seed + static_cast<uint64_t>(k), max_steps)] += 1;
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
#pragma omp critical
    for (const auto& [s, c] : local) merged[s] += c;
  }
  if (err) std::rethrow_exception(err);
  return merged;
}

}  // namespace mvf
