#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"
#include "mvf/local/branches.hpp"

namespace mvf {

namespace {

PlaceDatum datum_of(const PlaceSpec& s) {
  return s.kind == Theory::RCF ? PlaceDatum::rational_real() : PlaceDatum::rational_padic(s.prime);
}

}  // namespace

ECReport ec_check(const ECDescription& desc) {
  if (desc.places.empty()) fail(ErrorCode::InvalidArgument, "description has no places");
  for (size_t i = 1; i < desc.places.size(); ++i)
    if (desc.places[i].kind != Theory::ACVF)
      fail(ErrorCode::HypothesisViolated,
           "place " + std::to_string(i) + " is " + desc.places[i].to_string() + ", not ACVF");
  ECReport r;
  try {
    desc.places[0].validate();
    r.t1_model_ok = true;
  } catch (const Error&) {
    r.t1_model_ok = false;
  }
  bool all_nontrivial = true;
  for (size_t i = 1; i < desc.places.size(); ++i) {
    bool nt = is_prime(desc.places[i].prime);
    r.nontrivial.push_back(nt);
    all_nontrivial = all_nontrivial && nt;
  }
  r.pairwise_distinct_topologies = true;
  if (r.t1_model_ok && all_nontrivial) {
    for (size_t i = 0; i < desc.places.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (same_topology(datum_of(desc.places[i]), datum_of(desc.places[j])))
          r.pairwise_distinct_topologies = false;
  } else {
    // Without well-defined topologies compare the descriptions directly.
    for (size_t i = 0; i < desc.places.size(); ++i)
      for (size_t j = 0; j < i; ++j)
        if (desc.places[i].prime == desc.places[j].prime) r.pairwise_distinct_topologies = false;
  }
  r.verdict = r.t1_model_ok && all_nontrivial && r.pairwise_distinct_topologies;
  return r;
}

}  // namespace mvf
