#include <gtest/gtest.h>

#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"

using namespace mvf;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(A1, Examples) {
  auto r = a1prime_oracle(P({-2, 0, 1}), BaseStructure{{PlaceSpec::rcf(), PlaceSpec::pcf(5)}});
  ASSERT_EQ(r.per_place.size(), 2u);
  EXPECT_TRUE(r.per_place[0].second);
  EXPECT_FALSE(r.per_place[1].second);
  EXPECT_TRUE(r.a1_clause_met);

  r = a1prime_oracle(P({1, 0, 1}), BaseStructure{{PlaceSpec::rcf()}});
  EXPECT_FALSE(r.per_place[0].second);
  EXPECT_TRUE(r.a1_clause_met);

  r = a1prime_oracle(P({-6, 0, 1}), BaseStructure{{PlaceSpec::pcf(5)}});
  EXPECT_TRUE(r.per_place[0].second);
  EXPECT_FALSE(r.a1_clause_met);
}

TEST(A1, LinearAndAcvf) {
  auto r = a1prime_oracle(P({-3, 1}), BaseStructure{{PlaceSpec::pcf(5)}});
  EXPECT_TRUE(r.per_place[0].second);
  EXPECT_TRUE(r.a1_clause_met);
  r = a1prime_oracle(P({1, 0, 1}), BaseStructure{{PlaceSpec::acvf(3)}});
  EXPECT_TRUE(r.per_place[0].second);
  EXPECT_FALSE(r.a1_clause_met);
}

TEST(A1, RejectsReducible) {
  EXPECT_EQ(code_of([] { a1prime_oracle(P({-1, 0, 1}), BaseStructure{{PlaceSpec::rcf()}}); }),
            ErrorCode::PreconditionViolated);
}

TEST(EC, Examples) {
  auto r = ec_check({{PlaceSpec::acvf(2), PlaceSpec::acvf(3)}});
  EXPECT_TRUE(r.verdict);
  r = ec_check({{PlaceSpec::rcf(), PlaceSpec::acvf(5)}});
  EXPECT_TRUE(r.t1_model_ok);
  EXPECT_TRUE(r.pairwise_distinct_topologies);
  EXPECT_TRUE(r.verdict);
  r = ec_check({{PlaceSpec::acvf(5), PlaceSpec::acvf(5)}});
  EXPECT_FALSE(r.pairwise_distinct_topologies);
  EXPECT_FALSE(r.verdict);
}

TEST(EC, TrivialValuation) {
  auto r = ec_check({{PlaceSpec::rcf(), PlaceSpec{Theory::ACVF, Integer(0)}}});
  ASSERT_EQ(r.nontrivial.size(), 1u);
  EXPECT_FALSE(r.nontrivial[0]);
  EXPECT_FALSE(r.verdict);
}

TEST(EC, HypothesisViolated) {
  EXPECT_EQ(code_of([] { ec_check({{PlaceSpec::rcf(), PlaceSpec::pcf(5)}}); }), ErrorCode::HypothesisViolated);
}

TEST(EC, DuplicatePlaceBreaksDistinctness) {
  std::vector<std::vector<PlaceSpec>> descs = {
      {PlaceSpec::rcf(), PlaceSpec::acvf(2), PlaceSpec::acvf(3)},
      {PlaceSpec::acvf(7), PlaceSpec::acvf(5)},
      {PlaceSpec::pcf(3), PlaceSpec::acvf(5), PlaceSpec::acvf(11)}};
  for (const auto& d : descs) {
    EXPECT_TRUE(ec_check({d}).pairwise_distinct_topologies);
    for (size_t k = 1; k < d.size(); ++k) {
      auto more = d;
      more.push_back(PlaceSpec::acvf(d[k].prime.get_si()));
      EXPECT_FALSE(ec_check({more}).pairwise_distinct_topologies);
    }
  }
}

TEST(Shatter, SingleParameter) {
  auto r = ip_shatter_demo(1, 5);
  EXPECT_EQ(r.closure_degree, 2);
  EXPECT_TRUE(r.all_subsets());
  EXPECT_TRUE(r.twists_consistent);
  ASSERT_EQ(r.a_values.size(), 1u);
  Rat b = r.a_values[0] + r.epsilon;
  EXPECT_GT(b, 0);
  EXPECT_GT(valuation(b - Rat(1, 4), Integer(5)), 0);
}

TEST(Shatter, RejectsLargeM) {
  EXPECT_EQ(code_of([] { ip_shatter_demo(4, 5); }), ErrorCode::PreconditionViolated);
  EXPECT_EQ(code_of([] { ip_shatter_demo(0, 5); }), ErrorCode::PreconditionViolated);
}

TEST(Shatter, ChiMembership) {
  Rat b(21, 4);
  EXPECT_GT(b, 0);
  EXPECT_EQ(valuation(b - Rat(1, 4), Integer(5)), 1);
}

TEST(Burden, Examples) {
  auto r = burden_pattern_demo({2, 3}, 2, 3);
  bool found = false;
  for (const auto& path : r.paths)
    if (path.eta == std::vector<int>{1, 2}) {
      found = true;
      EXPECT_EQ(path.product_witness, Rat(18));
      EXPECT_TRUE(path.verified);
    }
  EXPECT_TRUE(found);

  r = burden_pattern_demo({2, 3, 5}, 3, 3);
  EXPECT_EQ(r.paths.size(), 27u);
  EXPECT_TRUE(r.all_witnessed());
  for (bool b : r.row_inconsistent) EXPECT_TRUE(b);
}

TEST(Burden, SolverWitnessHasExactValuations) {
  auto r = burden_pattern_demo({2, 5}, 2, 4);
  for (const auto& path : r.paths)
    for (size_t i = 0; i < r.primes.size(); ++i)
      EXPECT_EQ(valuation(path.solver_witness, Integer(r.primes[i])), path.eta[i]);
}

TEST(Dichotomy, Examples) {
  EXPECT_TRUE(newton_dichotomy_check(Rat(21, 4), 5));
  EXPECT_TRUE(newton_dichotomy_check(Rat(1, 4) + 25, 5));
  EXPECT_EQ(code_of([] { newton_dichotomy_check(Rat(2), 5); }), ErrorCode::PreconditionViolated);
}
