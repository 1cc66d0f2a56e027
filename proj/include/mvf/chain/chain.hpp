#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mvf/chain/formula.hpp"
#include "mvf/chain/state.hpp"
#include "mvf/exact/rational.hpp"

namespace mvf {

using Distribution = std::map<State, Rat>;

enum class Kernel { Serial, Parallel };

// Exact one-step distribution mu^1 out of s.
Distribution step(const ChainContext& ctx, const State& s, Kernel k = Kernel::Parallel);

// No state with a strictly larger field extends s. Decided by enumerating
// subgroups, independently of the transition kernel.
bool is_maximal(const ChainContext& ctx, const State& s);

// Every state reachable from the initial state, with one-step distributions.
struct StateGraph {
  std::vector<State> states;                  // ascending order
  std::map<State, Distribution> transitions;  // per state
};
StateGraph explore(const ChainContext& ctx, Kernel k = Kernel::Parallel);

// Exact limit distribution of the chain started at the initial state.
Distribution limit_distribution(const ChainContext& ctx, Kernel k = Kernel::Parallel);
Distribution limit_distribution(const StateGraph& g, const State& start);

// Truth of the sentence in the models whose intersection with L is the
// maximal state s. ClosureTooSmall unless L splits the witness;
// PreconditionViolated if s is not maximal.
bool eval_sentence(const ChainContext& ctx, const State& s, const Sentence& sentence);
bool eval_expr(const ChainContext& ctx, const State& s, const SentenceExpr& e);

// Evaluate over many maximal states; the parallel sweep returns the same
// vector as the serial one.
std::vector<bool> eval_states(const ChainContext& ctx, const std::vector<State>& states,
                              const SentenceExpr& e, Kernel k = Kernel::Parallel);

struct MeasureResult {
  Rat value;
  Distribution limit;
  std::vector<bool> truth;  // per support state, in map order
};

// P(sentence): limit mass of the maximal states where the sentence holds.
// Without a closure, L is the splitting field of the witness.
Rat measure(const Sentence& s, const BaseStructure& base);
MeasureResult measure(const SentenceExpr& e, const ContextPtr& ctx);
// Reuses a limit distribution already computed for ctx.
MeasureResult measure(const SentenceExpr& e, const ContextPtr& ctx, const Distribution& limit);
MeasureResult measure(const Sentence& s, const ContextPtr& ctx);

// One sampled trajectory, deterministic given the seed. MaxStepsExceeded
// if no absorbing state is reached within max_steps transitions.
State sample_chain(const ChainContext& ctx, uint64_t seed, int max_steps = 10000);

// Empirical frequencies of `samples` trajectories seeded seed, seed+1, ...
std::map<State, int64_t> sample_frequencies(const ChainContext& ctx, uint64_t seed, int samples,
                                            int max_steps = 10000);

}  // namespace mvf
