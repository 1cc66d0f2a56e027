#pragma once

#include <map>
#include <vector>

#include "mvf/chain/state.hpp"
#include "mvf/exact/rational.hpp"

namespace mvf {

// One-step transition counts out of a state: each successor with the number
// of tuples in H^n leading to it. Counts sum to |H|^n.
using StepCounts = std::map<State, Integer>;

// Reference kernel: literal enumeration of (sigma_1..sigma_n) in H^n.
StepCounts step_counts_serial(const ChainContext& ctx, const State& s);
// Enumerates orbit tuples (y_1..y_n) weighted by prod |H|/|orbit_i| and
// splits the tuple range across OpenMP threads; merged by summing counts.
StepCounts step_counts_parallel(const ChainContext& ctx, const State& s);

}  // namespace mvf
