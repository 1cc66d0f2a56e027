#include "mvf/chain/kernels.hpp"

#include <omp.h>

namespace mvf {

StepCounts step_counts_serial(const ChainContext& ctx, const State& s) {
  const auto hm = ctx.closure()->members(s.h);
  const int n = ctx.size();
  const int m = static_cast<int>(hm.size());
  StepCounts out;
  std::vector<int> digit(n, 0), sigma(n);
  while (true) {
    for (int i = 0; i < n; ++i) sigma[i] = hm[digit[i]];
    out[ctx.successor(s, sigma)] += 1;
    int i = 0;
    while (i < n && ++digit[i] == m) digit[i++] = 0;
    if (i == n) break;
  }
  return out;
}

StepCounts step_counts_parallel(const ChainContext& ctx, const State& s) {
  const int n = ctx.size();
  const int m = popcount(s.h);
  std::vector<std::vector<int>> orbit(n);
  Integer weight = 1;
  int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    for (int x = 0; x < ctx.places(i).count(); ++x)
      if (s.orbits[i] >> x & 1) orbit[i].push_back(x);
    // Each y in the orbit is sigma(x) for exactly |H| / |orbit| choices.
    weight *= m / static_cast<int>(orbit[i].size());
    total *= static_cast<int64_t>(orbit[i].size());
  }
  std::map<State, int64_t> merged;
#pragma omp parallel
  {
    std::map<State, int64_t> local;
    std::vector<int> ys(n);
#pragma omp for schedule(static)
    for (int64_t t = 0; t < total; ++t) {
      int64_t r = t;
      for (int i = 0; i < n; ++i) {
        int64_t k = static_cast<int64_t>(orbit[i].size());
        ys[i] = orbit[i][r % k];
        r /= k;
      }
      local[ctx.successor_from_places(s, ys)] += 1;
    }
#pragma omp critical
    for (const auto& [st, c] : local) merged[st] += c;
  }
  StepCounts out;
  for (const auto& [st, c] : merged) out[st] = Integer(c) * weight;
  return out;
}

}  // namespace mvf
