#include "mvf/errors.hpp"
#include "mvf/exact/factor.hpp"
#include "mvf/experiments/experiments.hpp"
#include "mvf/local/padic.hpp"
#include "mvf/local/real_roots.hpp"

namespace mvf {

A1Report a1prime_oracle(const Poly& f, const BaseStructure& base) {
  base.validate();
  if (f.degree() < 1) fail(ErrorCode::PreconditionViolated, "A1' oracle needs a nonconstant polynomial");
  if (!is_irreducible(f))
    fail(ErrorCode::PreconditionViolated, f.to_string() + " is reducible over Q; factor it first");
  A1Report r;
  r.poly = f;
  r.a1_clause_met = f.degree() <= 1;
  for (const auto& spec : base.places) {
    bool has_root = true;
    switch (spec.kind) {
      case Theory::RCF: has_root = count_real_roots(f) > 0; break;
      case Theory::PCF: has_root = has_padic_root(f, spec.prime); break;
      case Theory::ACVF: has_root = true; break;  // algebraically closed
    }
    r.per_place.emplace_back(spec, has_root);
    if (!has_root) r.a1_clause_met = true;
  }
  return r;
}

}  // namespace mvf
