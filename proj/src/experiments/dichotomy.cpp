#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"
#include "mvf/local/branches.hpp"

namespace mvf {

bool newton_dichotomy_check(const Rat& y, long p) {
  Integer P(p);
  if (!is_prime(P)) fail(ErrorCode::InvalidArgument, "p must be prime");
  Rat d = y - Rat(1, 4);
  if (d != 0 && valuation(d, P) <= 0)
    fail(ErrorCode::PreconditionViolated, "needs v_p(y - 1/4) > 0, got y = " + to_string(y));
  if (d == 0) fail(ErrorCode::PreconditionViolated, "y = 1/4 gives a double root");
  Poly f = Poly::x() * Poly::x() - Poly::constant(y);
  auto branches = hensel_branches(f, P, 20);
  if (branches.size() != 2) return false;
  int hits = 0;
  for (const auto& b : branches) {
    auto K = NumberField::create(b.poly.monic(), true);
    NFElement t = NFElement::generator(K) - NFElement::rational(K, Rat(1, 2));
    if (value_at(b, t) > ExtValue::of(Rat(0))) ++hits;
  }
  return hits == 1;
}

}  // namespace mvf
