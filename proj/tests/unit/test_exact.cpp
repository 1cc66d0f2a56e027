#include <gtest/gtest.h>

#include <random>

#include "mvf/errors.hpp"
#include "mvf/exact/crt.hpp"
#include "mvf/exact/factor.hpp"
#include "mvf/exact/poly.hpp"

using namespace mvf;

namespace {

Poly P(std::initializer_list<long> c) { return Poly::from_ints(c); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rat("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rat("-0/7")), "0");
  EXPECT_EQ(to_string(parse_rat("12")), "12");
  EXPECT_THROW(parse_rat("1/0"), Error);
  EXPECT_THROW(parse_rat("abc"), Error);
  EXPECT_THROW(parse_rat(""), Error);
}

TEST(Rational, Valuation) {
  EXPECT_EQ(valuation(Rat(352), Integer(2)), 5);
  EXPECT_EQ(valuation(parse_rat("7/4"), Integer(5)), 0);
  EXPECT_EQ(valuation(parse_rat("3/50"), Integer(5)), -2);
  EXPECT_THROW(valuation(Rat(0), Integer(5)), Error);
}

TEST(PolyGcd, SharedRoot) { EXPECT_EQ(poly_gcd(P({-1, 0, 1}), P({-1, 1})), P({-1, 1})); }

TEST(PolyGcd, Coprime) { EXPECT_EQ(poly_gcd(P({1, 0, 1}), P({-2, 0, 1})), P({1})); }

TEST(PolyGcd, WithZero) {
  EXPECT_EQ(poly_gcd(Poly(), P({0, 0, 0, 3})), P({0, 0, 0, 1}));
}

TEST(PolyArith, DivmodAndCompose) {
  auto [q, r] = divmod(P({1, 2, 3, 4}), P({1, 1}));
  EXPECT_EQ(q * P({1, 1}) + r, P({1, 2, 3, 4}));
  EXPECT_LT(r.degree(), 1);
  EXPECT_EQ(P({0, 0, 1}).compose(P({1, 1})), P({1, 2, 1}));
  EXPECT_EQ(P({0, 0, 1}).shift(Rat(1)), P({1, 2, 1}));
}

TEST(PolyArith, Resultant) {
  // Res(x^2+1, x-2) = 5.
  EXPECT_EQ(resultant(P({1, 0, 1}), P({-2, 1})), Rat(5));
  EXPECT_EQ(resultant(P({-2, 1}), P({1, 0, 1})), Rat(5));
  EXPECT_EQ(resultant(P({-1, 0, 1}), P({-1, 1})), Rat(0));
  EXPECT_EQ(discriminant(P({-2, 0, 1})), Rat(8));
  EXPECT_EQ(discriminant(P({-2, 0, 0, 1})), Rat(-108));
}

TEST(PolyArith, MonicIntegral) {
  auto mi = make_monic_integral(Poly{Rat(-1), Rat(0), Rat(4)});
  // roots of 4x^2-1 scaled by 4: y^2 - 4.
  EXPECT_EQ(mi.poly, P({-4, 0, 1}));
  EXPECT_EQ(mi.scale, Rat(4));
}

TEST(PolyArith, Interpolate) {
  Poly f = P({3, -1, 0, 2});
  std::vector<Rat> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs.emplace_back(i);
    ys.push_back(f.eval(Rat(i)));
  }
  EXPECT_EQ(interpolate(xs, ys), f);
}

TEST(Squarefree, Yun) {
  Poly f = pow(P({-1, 1}), 3) * P({2, 1}) * pow(P({1, 0, 1}), 2);
  auto parts = squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], P({2, 1}));
  EXPECT_EQ(parts[1], P({1, 0, 1}));
  EXPECT_EQ(parts[2], P({-1, 1}));
  EXPECT_EQ(squarefree_part(f), P({-1, 1}) * P({2, 1}) * P({1, 0, 1}));
}

TEST(Factor, DifferenceOfSquares) {
  auto fl = factor_over_Q(P({-1, 0, 1}));
  ASSERT_EQ(fl.factors.size(), 2u);
  EXPECT_EQ(fl.factors[0].first, P({-1, 1}));
  EXPECT_EQ(fl.factors[1].first, P({1, 1}));
  EXPECT_EQ(fl.expand(), P({-1, 0, 1}));
}

TEST(Factor, XFourPlusOneIrreducible) {
  Poly f = P({1, 0, 0, 0, 1});
  EXPECT_TRUE(is_irreducible(f));
  // Oracle: no factorization (x^2+ax+b)(x^2+cx+d) with bounded integer
  // coefficients (Gauss: integer factors suffice for monic integer f).
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d)
          EXPECT_NE(P({b, a, 1}) * P({d, c, 1}), f);
}

TEST(Factor, ContentAndUnit) {
  auto fl = factor_over_Q(P({-4, 0, 2}));
  EXPECT_EQ(fl.unit, Rat(2));
  ASSERT_EQ(fl.factors.size(), 1u);
  EXPECT_EQ(fl.factors[0].first, P({-2, 0, 1}));
  EXPECT_TRUE(rational_roots(P({-2, 0, 1})).empty());
}

TEST(Factor, Multiplicities) {
  Poly f = pow(P({-3, 1}), 2) * P({-2, 0, 0, 1}) * P({0, 1});
  auto fl = factor_over_Q(f);
  EXPECT_EQ(fl.expand(), f);
  ASSERT_EQ(fl.factors.size(), 3u);
}

TEST(Factor, SwinnertonDyerDegreeEight) {
  // Minimal polynomial of sqrt2+sqrt3+sqrt5: irreducible, splits into
  // quadratics or linears modulo every prime.
  Poly x = Poly::x();
  Poly f = P({576, 0, -960, 0, 352, 0, -40, 0, 1});
  EXPECT_TRUE(is_irreducible(f));
  Poly g = f * P({-7, 0, 1});
  auto fl = factor_over_Q(g);
  EXPECT_EQ(fl.factors.size(), 2u);
  EXPECT_EQ(fl.expand(), g);
}

TEST(Factor, ProductOfCyclotomics) {
  Poly f = P({1, 1, 1}) * P({1, 0, 1}) * P({1, 1, 1, 1, 1}) * P({-1, 0, 0, 0, 0, 0, 1});
  auto fl = factor_over_Q(f);
  EXPECT_EQ(fl.expand(), f);
}

TEST(Factor, ZeroPolynomial) {
  try {
    factor_over_Q(Poly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(Factor, RandomRemultiply) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 6);
  for (int it = 0; it < 300; ++it) {
    int d = deg(rng);
    std::vector<Rat> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    if (c.back() == 0) c.back() = 1;
    Poly f(c);
    auto fl = factor_over_Q(f);
    ASSERT_EQ(fl.expand(), f) << f.to_string();
    for (auto& [g, m] : fl.factors) {
      EXPECT_EQ(g.lead(), Rat(1));
      // Irreducibility of degree <= 3 factors via rational root test.
      if (g.degree() >= 2 && g.degree() <= 3) {
        auto form = primitive_integer_form(g);
        const auto& a = form.prim;
        for (long num = -200; num <= 200; ++num)
          for (long den = 1; den <= 20; ++den)
            if (mpz_divisible_ui_p(a[0].get_mpz_t(), std::abs(num) ? std::abs(num) : 1) &&
                mpz_divisible_ui_p(a.back().get_mpz_t(), den))
              EXPECT_NE(g.eval(make_rat(num, den)), 0);
      }
    }
  }
}

TEST(Factor, ProductsOfRandomFactors) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int it = 0; it < 60; ++it) {
    Poly f = Poly::constant(1);
    for (int k = 0; k < 3; ++k) {
      std::vector<Rat> c;
      int d = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < d; ++i) c.emplace_back(coef(rng));
      c.emplace_back(1);
      f = f * Poly(c);
    }
    auto fl = factor_over_Q(f);
    EXPECT_EQ(fl.expand(), f);
  }
}

TEST(Gcd, DividesBothAndMatchesCommonRoots) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> r(-3, 3);
  for (int it = 0; it < 200; ++it) {
    // Build from explicit integer roots so the common-root count is known.
    std::vector<int> ra, rb;
    Poly a = Poly::constant(1), b = Poly::constant(1);
    for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) {
      int x = r(rng);
      if (std::find(ra.begin(), ra.end(), x) != ra.end()) continue;
      ra.push_back(x);
      a = a * P({-x, 1});
    }
    for (int k = 0; k < 1 + static_cast<int>(rng() % 4); ++k) {
      int x = r(rng);
      if (std::find(rb.begin(), rb.end(), x) != rb.end()) continue;
      rb.push_back(x);
      b = b * P({-x, 1});
    }
    Poly g = poly_gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    int common = 0;
    for (int x : ra)
      if (std::find(rb.begin(), rb.end(), x) != rb.end()) ++common;
    EXPECT_EQ(g.degree(), common);
  }
}

TEST(Crt, Examples) {
  auto r = crt({{Integer(16), Integer(0)}, {Integer(27), Integer(1)}});
  EXPECT_EQ(r.residue, 352);
  EXPECT_EQ(r.modulus, 432);
  EXPECT_EQ(crt({{Integer(2), Integer(1)}}).residue, 1);
  EXPECT_EQ(crt({{Integer(3), Integer(2)}, {Integer(5), Integer(3)}}).residue, 8);
}

TEST(Crt, NonCoprime) {
  try {
    crt({{Integer(4), Integer(1)}, {Integer(6), Integer(3)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCoprimeModuli);
  }
}

TEST(Crt, BruteForce) {
  std::mt19937_64 rng(9);
  const long mods[] = {2, 3, 4, 5, 7, 9, 11, 13, 16, 17, 25};
  for (int it = 0; it < 300; ++it) {
    std::vector<Congruence> sys;
    long prod = 1;
    for (int k = 0; k < 3; ++k) {
      long m = mods[rng() % 11];
      bool ok = true;
      for (auto& c : sys)
        if (std::gcd(c.modulus.get_si(), m) != 1) ok = false;
      if (!ok || prod * m > 10000) continue;
      prod *= m;
      sys.push_back({Integer(m), Integer(static_cast<long>(rng() % m))});
    }
    auto r = crt(sys);
    long found = -1;
    for (long x = 0; x < prod; ++x) {
      bool all = true;
      for (auto& c : sys)
        if (x % c.modulus.get_si() != c.residue.get_si()) all = false;
      if (all) {
        found = x;
        break;
      }
    }
    EXPECT_EQ(r.residue, found);
  }
}
