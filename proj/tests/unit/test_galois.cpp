#include <gtest/gtest.h>

#include <random>

#include "mvf/errors.hpp"
#include "mvf/galois/closure.hpp"
#include "mvf/galois/fixed_field.hpp"
#include "mvf/galois/places.hpp"
#include "mvf/local/branches.hpp"

using namespace mvf;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

std::vector<Poly> test_generators() {
  return {P({1, 0, 1}),                  // Q(i)
          P({-2, 0, 1}),                 // Q(sqrt 2)
          P({-2, 0, 0, 1}),              // S3
          P({-2, 0, 1}) * P({-3, 0, 1}), // biquadratic
          P({-2, 0, 1}) * P({1, 0, 1}),  // Q(sqrt 2, i)
          P({-2, 0, 0, 0, 1}),           // D4
          P({1, 1, 1, 1, 1}),            // cyclic of order 4
          P({-1, -3, 0, 1})};            // cyclic cubic
}

NFElement random_element(const ClosurePtr& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-5, 5);
  std::vector<Rat> v;
  for (int i = 0; i < c->degree(); ++i) v.emplace_back(coef(rng));
  return NFElement(c->field(), Poly(v));
}

}  // namespace

TEST(Closure, Examples) {
  auto qi = GaloisClosure::build(P({1, 0, 1}));
  EXPECT_EQ(qi->degree(), 2);
  EXPECT_EQ(qi->order(), 2);

  auto s3 = GaloisClosure::build(P({-2, 0, 0, 1}));
  EXPECT_EQ(s3->degree(), 6);
  EXPECT_EQ(s3->order(), 6);
  EXPECT_FALSE(s3->is_abelian());
  bool noncommuting = false;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) noncommuting = noncommuting || s3->mul(a, b) != s3->mul(b, a);
  EXPECT_TRUE(noncommuting);

  auto v4 = GaloisClosure::build(P({-2, 0, 1}) * P({-3, 0, 1}));
  EXPECT_EQ(v4->degree(), 4);
  EXPECT_TRUE(v4->is_abelian());
  for (int g = 1; g < 4; ++g) EXPECT_EQ(v4->element_order(g), 2);
}

TEST(Closure, DegreeCap) {
  ClosureOptions opt;
  opt.degree_cap = 4;
  EXPECT_THROW(
      {
        try {
          GaloisClosure::build(P({-2, 0, 0, 1}), opt);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::DegreeCapExceeded);
          throw;
        }
      },
      Error);
}

TEST(Closure, RootsAreRoots) {
  for (const Poly& f : test_generators()) {
    auto c = GaloisClosure::build(f);
    ASSERT_EQ(static_cast<int>(c->roots().size()), f.degree());
    for (const auto& r : c->roots()) EXPECT_TRUE(eval(f, r).is_zero()) << f.to_string();
    EXPECT_TRUE(c->contains_splitting_field(f));
  }
}

TEST(Closure, AutomorphismsAreMultiplicative) {
  std::mt19937_64 rng(17);
  for (const Poly& f : test_generators()) {
    auto c = GaloisClosure::build(f);
    for (int g = 0; g < c->order(); ++g) {
      for (int trial = 0; trial < 50; ++trial) {
        NFElement a = random_element(c, rng), b = random_element(c, rng);
        EXPECT_EQ(c->apply(g, a * b), c->apply(g, a) * c->apply(g, b));
        EXPECT_EQ(c->apply(g, a + b), c->apply(g, a) + c->apply(g, b));
      }
      for (size_t k = 0; k < c->roots().size(); ++k)
        EXPECT_EQ(c->apply(g, c->roots()[k]), c->roots()[c->permutations()[g][k]]);
    }
  }
}

TEST(Closure, GroupTable) {
  for (const Poly& f : test_generators()) {
    auto c = GaloisClosure::build(f);
    std::mt19937_64 rng(1);
    NFElement z = random_element(c, rng);
    for (int a = 0; a < c->order(); ++a) {
      EXPECT_EQ(c->mul(a, c->inv(a)), 0);
      for (int b = 0; b < c->order(); ++b)
        EXPECT_EQ(c->apply(c->mul(a, b), z), c->apply(a, c->apply(b, z)));
    }
  }
}

TEST(Closure, GaloisCorrespondence) {
  for (const Poly& f : test_generators()) {
    auto c = GaloisClosure::build(f);
    for (Mask h : c->subgroups()) {
      ASSERT_TRUE(c->is_subgroup(h));
      FixedField fix(c, h);
      EXPECT_EQ(popcount(h) * fix.degree(), c->degree()) << f.to_string();
      for (int g : c->members(h)) EXPECT_EQ(c->apply(g, fix.primitive()), fix.primitive());
    }
  }
}

TEST(Closure, RootsInFixedField) {
  Poly f = P({-2, 0, 1}) * P({-3, 0, 1});
  auto c = GaloisClosure::build(f);
  EXPECT_TRUE(c->roots_in_fixed_field(P({-2, 0, 1}), c->full_mask()).empty());
  int found = 0;
  for (Mask h : c->subgroups()) {
    if (popcount(h) != 2) continue;
    auto r = c->roots_in_fixed_field(P({-2, 0, 1}), h);
    if (r.size() == 2) {
      ++found;
      EXPECT_EQ(r[0] + r[1], NFElement::rational(c->field(), Rat(0)));
    }
  }
  EXPECT_EQ(found, 1);
  auto r = c->roots_in_fixed_field(P({-3, 1}), c->full_mask());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], NFElement::rational(c->field(), Rat(3)));
}

TEST(Closure, GeneratedSubgroup) {
  auto c = GaloisClosure::build(P({-2, 0, 1}) * P({-3, 0, 1}));
  EXPECT_EQ(c->generate(1), Mask(1));
  EXPECT_EQ(c->generate(0b0110), c->full_mask());
  for (Mask h : c->subgroups()) EXPECT_EQ(c->generate(h), h);
}

TEST(Closure, RelabeledIsSameField) {
  auto c = GaloisClosure::build(P({-2, 0, 0, 1}));
  for (int g = 0; g < c->order(); ++g) {
    auto r = c->relabeled(g);
    EXPECT_EQ(r->order(), c->order());
    for (size_t k = 0; k < r->roots().size(); ++k)
      EXPECT_EQ(r->roots()[k], c->roots()[c->permutations()[g][k]]);
  }
}

TEST(Places, DecompositionGroups) {
  auto qi = GaloisClosure::build(P({1, 0, 1}));
  EXPECT_EQ(PlaceSet::above(qi, Integer(5))->decomposition(), Mask(1));
  EXPECT_EQ(PlaceSet::above(qi, Integer(5))->count(), 2);
  EXPECT_EQ(PlaceSet::above(qi, Integer(3))->decomposition(), qi->full_mask());
  auto q5 = GaloisClosure::build(P({-5, 0, 1}));
  EXPECT_EQ(PlaceSet::above(q5, Integer(5))->decomposition(), q5->full_mask());
}

TEST(Places, ConjugationInvolutions) {
  auto r2 = conjugation_involutions(GaloisClosure::build(P({-2, 0, 1})));
  EXPECT_EQ(r2, std::vector<int>{0});
  auto qi = GaloisClosure::build(P({1, 0, 1}));
  auto ci = conjugation_involutions(qi);
  ASSERT_EQ(ci.size(), 1u);
  EXPECT_NE(ci[0], 0);
  // Q(sqrt 2, i) is Galois: complex conjugation is one element, fixing sqrt 2.
  auto c = GaloisClosure::build(P({-2, 0, 1}) * P({1, 0, 1}));
  auto cc = conjugation_involutions(c);
  ASSERT_EQ(cc.size(), 1u);
  EXPECT_EQ(c->element_order(cc[0]), 2);
  for (const auto& r : c->roots_of(P({-2, 0, 1}))) EXPECT_EQ(c->apply(cc[0], r), r);
  // S3: three complex conjugations, one per complex embedding pair.
  EXPECT_EQ(conjugation_involutions(GaloisClosure::build(P({-2, 0, 0, 1}))).size(), 3u);
}

TEST(Places, TransitiveActionAndEf) {
  for (const Poly& f : test_generators()) {
    auto c = GaloisClosure::build(f);
    for (long p : {2, 3, 5, 7}) {
      auto ps = PlaceSet::above(c, Integer(p));
      EXPECT_EQ(ps->orbit(c->full_mask(), 0), (Mask(1) << ps->count()) - 1);
      Ramification ram = certify_ramification(*ps);
      EXPECT_EQ(ram.e * ram.f * ps->count(), c->degree()) << f.to_string() << " p=" << p;
      EXPECT_EQ(ram.e * ram.f, popcount(ps->decomposition()));
      for (int x = 0; x < ps->count(); ++x) {
        int g = ps->representative(x);
        EXPECT_EQ(ps->stabilizer(x), c->conjugate(g, ps->decomposition()));
      }
    }
    auto arch = PlaceSet::archimedean(c);
    EXPECT_EQ(arch->orbit(c->full_mask(), 0), (Mask(1) << arch->count()) - 1);
  }
}

TEST(Places, ValuationsAreConjugate) {
  auto c = GaloisClosure::build(P({1, 0, 1}));
  auto ps = PlaceSet::above(c, Integer(5));
  NFElement i = c->roots()[0];
  NFElement z = i - NFElement::rational(c->field(), Rat(2));
  ExtValue a = ps->valuation(0, z), b = ps->valuation(1, z);
  EXPECT_EQ(a.value + b.value, Rat(1));
  EXPECT_TRUE(a.value == 0 || b.value == 0);
  for (int g = 0; g < c->order(); ++g)
    EXPECT_EQ(ps->valuation(ps->act(g, 0), c->apply(g, z)), ps->valuation(0, z));
}
