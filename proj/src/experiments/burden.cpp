#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"

namespace mvf {

bool BurdenReport::all_witnessed() const {
  for (const auto& p : paths)
    if (!p.verified) return false;
  return !paths.empty();
}

BurdenReport burden_pattern_demo(const std::vector<long>& primes, int depth, int width) {
  if (depth != static_cast<int>(primes.size()))
    fail(ErrorCode::InvalidArgument, "depth must equal the number of primes");
  if (width < 1 || depth < 1) fail(ErrorCode::InvalidArgument, "depth and width must be positive");
  for (size_t i = 0; i < primes.size(); ++i) {
    if (!is_prime(Integer(primes[i]))) fail(ErrorCode::InvalidArgument, "burden rows need primes");
    for (size_t j = 0; j < i; ++j)
      if (primes[i] == primes[j]) fail(ErrorCode::InvalidArgument, "primes must be distinct");
  }
  BurdenReport r;
  r.primes = primes;
  r.width = width;
  // v(x) = j is the ball around p^j of radius j + 1; two such balls for
  // j != j' must be rejected by the solver as disjoint.
  for (int i = 0; i < depth; ++i) {
    bool ok = true;
    for (int j = 0; j < width && ok; ++j)
      for (int j2 = j + 1; j2 < width && ok; ++j2) {
        Integer p(primes[i]);
        std::vector<Constraint> pair{Constraint::val_ge(primes[i], Rat(ipow(p, j)), Rat(j + 1)),
                                     Constraint::val_ge(primes[i], Rat(ipow(p, j2)), Rat(j2 + 1))};
        try {
          stone_solve(pair);
          ok = false;
        } catch (const Error& e) {
          ok = e.code() == ErrorCode::InconsistentSamePlace;
        }
      }
    r.row_inconsistent.push_back(ok);
  }
  std::vector<int> eta(depth, 0);
  while (true) {
    BurdenPath path;
    path.eta = eta;
    Integer prod = 1;
    std::vector<Constraint> cs;
    for (int i = 0; i < depth; ++i) {
      Integer pe = ipow(Integer(primes[i]), eta[i]);
      prod *= pe;
      // The ball around p^eta of radius eta+1 is exactly valuation eta.
      cs.push_back(Constraint::val_ge(primes[i], Rat(pe), Rat(eta[i] + 1)));
    }
    path.product_witness = Rat(prod);
    path.solver_witness = stone_solve(cs);
    path.verified = true;
    for (int i = 0; i < depth; ++i) {
      Integer p(primes[i]);
      path.verified = path.verified && path.solver_witness != 0 &&
                      valuation(path.solver_witness, p) == eta[i] &&
                      valuation(path.product_witness, p) == eta[i];
    }
    r.paths.push_back(std::move(path));
    int i = 0;
    while (i < depth && ++eta[i] == width) eta[i++] = 0;
    if (i == depth) break;
  }
  return r;
}

}  // namespace mvf
