// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. `acceptance N [N ...]` runs only the listed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "common/generators.hpp"
#include "mvf/approx/stone.hpp"
#include "mvf/chain/chain.hpp"
#include "mvf/errors.hpp"
#include "mvf/experiments/experiments.hpp"
#include "mvf/local/real_roots.hpp"

using namespace mvf;
using namespace mvf::testgen;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Finite additivity and complementation of the measure.
Outcome keisler_laws() {
  auto t0 = Clock::now();
  std::mt19937_64 rng(101);
  int pairs = 0, bad = 0, fractional = 0, max_degree = 0;
  for (int k = 0; pairs < 240; ++k) {
    Instance in = random_instance(rng, k % 4 != 0);
    max_degree = std::max(max_degree, in.ctx->closure()->degree());
    Distribution limit = limit_distribution(*in.ctx);
    for (int j = 0; j < 6; ++j, ++pairs) {
      // Prefer a first sentence that separates the maximal states.
      Sentence a = random_sentence(rng, in.base, *in.ctx->closure());
      for (int tries = 0; tries < 6; ++tries) {
        Rat q = measure(SentenceExpr::leaf(a), in.ctx, limit).value;
        if (q > 0 && q < 1) break;
        a = random_sentence(rng, in.base, *in.ctx->closure());
      }
      Sentence b = random_sentence(rng, in.base, *in.ctx->closure());
      auto ea = SentenceExpr::leaf(a), eb = SentenceExpr::leaf(b);
      Rat pa = measure(ea, in.ctx, limit).value, pb = measure(eb, in.ctx, limit).value;
      Rat pand = measure(SentenceExpr::conj(ea, eb), in.ctx, limit).value;
      Rat por = measure(SentenceExpr::leaf(disjoin(a, b)), in.ctx, limit).value;
      Rat pnot = measure(SentenceExpr::negation(ea), in.ctx, limit).value;
      if (pa + pb != pand + por || pnot != 1 - pa || pa < 0 || pa > 1) ++bad;
      fractional += pa > 0 && pa < 1;
    }
  }
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << pairs << " pairs, closure degree <= " << max_degree << ", " << fractional
    << " with 0 < P < 1, " << bad << " violations, " << secs << " s";
  return {bad == 0 && pairs >= 200 && fractional >= 20 && max_degree <= 8 && secs < 60, d.str()};
}

// 2. The worked measure value for exists y: y^2 + 1 = 0 and v_5(y - 2) > 0.
//
// Oracle: 5 splits in Q(i), and the two extensions of v_5 are the two
// embeddings of Q(i) into Q_5, i -> r with r^2 = -1, r = 2 or 3 mod 5.
// Under each extension the sentence asks whether some root y of y^2 + 1
// lands in 2 + 5 Z_5.
Outcome worked_measure() {
  int holds = 0, fixed_root = 0;
  for (long r = 0; r < 5; ++r) {
    if ((r * r + 1) % 5 != 0) continue;
    bool some = false;
    for (long y : {r, (5 - r) % 5}) some = some || y == 2;
    holds += some;
    fixed_root += r == 2;
  }
  Rat oracle(holds, 2), fixed(fixed_root, 2);
  Sentence s{P({1, 0, 1}), QFFormula::atom(Atom::val_gt(0, P({-2, 1}), P({1})))};
  Rat p = measure(s, BaseStructure{{PlaceSpec::acvf(5)}});
  const Rat target(1, 2);
  std::ostringstream d;
  d << "P = " << to_string(p) << ", oracle over both extensions = " << to_string(oracle)
    << ", required " << to_string(target) << " (share of extensions with i itself near 2: "
    << to_string(fixed) << ")";
  return {p == target && oracle == target, d.str()};
}

// 3. The measure does not depend on the chosen closure.
Outcome closure_independence() {
  std::mt19937_64 rng(303);
  const std::vector<Poly> extra = {P({-7, 0, 1}), P({1, 0, 1}), P({-3, 0, 1}), P({-11, 0, 1}), P({-13, 0, 1})};
  int triples = 0, bad = 0, fractional = 0;
  while (triples < 24) {
    Instance in = random_instance(rng, true);
    if (in.ctx->closure()->degree() > 8) continue;
    Sentence s = random_sentence(rng, in.base, *in.ctx->closure());
    for (int tries = 0; tries < 10; ++tries) {
      Rat q = measure(s, in.ctx).value;
      if (q > 0 && q < 1) break;
      s = random_sentence(rng, in.base, *in.ctx->closure());
    }
    Poly big = squarefree_part(in.ctx->closure()->generator_poly() * extra[below(rng, 5)]);
    auto ctx2 = ChainContext::create(in.base, GaloisClosure::build(big));
    if (ctx2->closure()->degree() <= in.ctx->closure()->degree()) continue;
    Rat a = measure(s, in.ctx).value, b = measure(s, ctx2).value;
    bad += a != b;
    fractional += a > 0 && a < 1;
    ++triples;
  }
  std::ostringstream d;
  d << triples << " triples (" << fractional << " with 0 < P < 1), " << bad << " disagreements";
  return {bad == 0 && triples >= 20, d.str()};
}

std::vector<Instance> chain_instances() {
  std::vector<Instance> out;
  auto add = [&](std::vector<PlaceSpec> places, const Poly& g) {
    BaseStructure b{std::move(places)};
    out.push_back({b, ChainContext::create(b, GaloisClosure::build(g))});
  };
  add({PlaceSpec::acvf(5)}, P({1, 0, 1}));
  add({PlaceSpec::rcf()}, P({-2, 0, 1}));
  add({PlaceSpec::rcf(), PlaceSpec::pcf(5)}, P({-21, 0, 1}));
  add({PlaceSpec::rcf(), PlaceSpec::acvf(5)}, P({-2, 0, 0, 1}));
  add({PlaceSpec::pcf(2), PlaceSpec::pcf(3), PlaceSpec::rcf()}, P({-2, 0, 0, 1}));
  add({PlaceSpec::rcf(), PlaceSpec::acvf(7)}, P({-2, 0, 0, 0, 1}));
  add({PlaceSpec::rcf(), PlaceSpec::pcf(5)}, P({-1, 1}));
  std::mt19937_64 rng(404);
  for (int k = 0; k < 30; ++k) out.push_back(random_instance(rng, k % 2 == 0));
  return out;
}

// 4. Limit support equals the reachable maximal states, all weights are
// positive, and maximal states are exactly the absorbing ones.
Outcome concentration() {
  int states = 0, bad = 0;
  auto insts = chain_instances();
  for (const auto& in : insts) {
    const auto& ctx = *in.ctx;
    StateGraph g = explore(ctx);
    Distribution limit = limit_distribution(g, ctx.initial_state());
    Rat sum = 0;
    for (const auto& [s, w] : limit) {
      sum += w;
      if (w <= 0 || !is_maximal(ctx, s)) ++bad;
    }
    if (sum != 1) ++bad;
    for (const auto& [s, d] : g.transitions) {
      ++states;
      bool maximal = is_maximal(ctx, s);
      bool absorbing = d.size() == 1 && d.begin()->first == s;
      if (maximal != absorbing) ++bad;
      if (maximal && !limit.count(s)) ++bad;
    }
  }
  std::ostringstream d;
  d << insts.size() << " instances, " << states << " reachable states, " << bad << " violations";
  return {bad == 0, d.str()};
}

// 5. Positive one-step probabilities are at least 1/|H|^n.
Outcome transition_floor() {
  int transitions = 0, bad = 0;
  Rat smallest_ratio = -1;
  for (const auto& in : chain_instances()) {
    const auto& ctx = *in.ctx;
    for (const auto& [s, d] : explore(ctx).transitions) {
      Rat floor = Rat(1) / Rat(Integer(ipow(popcount(s.h), ctx.size())));
      for (const auto& [t, w] : d) {
        ++transitions;
        if (w < floor) ++bad;
        Rat ratio = w / floor;
        if (smallest_ratio < 0 || ratio < smallest_ratio) smallest_ratio = ratio;
      }
    }
  }
  std::ostringstream d;
  d << transitions << " positive transitions, min weight / floor = " << to_string(smallest_ratio) << ", " << bad
    << " below the floor";
  return {bad == 0, d.str()};
}

// 6. Sampled trajectories against exact limit weights.
Outcome monte_carlo() {
  const int samples = 10000;
  auto insts = chain_instances();
  insts.resize(6);
  int bad = 0;
  double worst_z = 0, slowest = 0;
  for (size_t k = 0; k < insts.size(); ++k) {
    auto t0 = Clock::now();
    const auto& ctx = *insts[k].ctx;
    Distribution exact = limit_distribution(ctx);
    auto freq = sample_frequencies(ctx, 1000 + k, samples);
    for (const auto& [s, n] : freq)
      if (!exact.count(s)) ++bad;
    for (const auto& [s, w] : exact) {
      double p = w.get_d();
      auto it = freq.find(s);
      double got = it == freq.end() ? 0 : static_cast<double>(it->second);
      double sigma = std::sqrt(samples * p * (1 - p));
      double dev = std::abs(got - samples * p);
      if (sigma > 0) worst_z = std::max(worst_z, dev / sigma);
      if (dev > 4 * sigma) ++bad;
    }
    double secs = seconds_since(t0);
    slowest = std::max(slowest, secs);
    if (secs >= 30) ++bad;
  }
  std::ostringstream d;
  d << insts.size() << " instances x " << samples << " samples, worst deviation " << worst_z
    << " sigma, slowest " << slowest << " s";
  return {bad == 0 && insts.size() >= 5, d.str()};
}

// Independent check of a constraint: exact valuation and comparisons.
bool holds(const Constraint& c, const Rat& x) {
  if (c.kind == Constraint::Kind::Interval) return c.lo < x && x < c.hi;
  Rat diff = x - c.center;
  if (diff == 0) return true;
  Rat v(valuation(diff, c.prime));
  return c.strict ? v > c.bound : v >= c.bound;
}

// 7. Weak approximation solver on random satisfiable systems.
Outcome stone() {
  std::mt19937_64 rng(707);
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  int bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Constraint> cs;
    std::set<long> used;
    int n = 1 + below(rng, 3);
    bool interval = false;
    while (static_cast<int>(cs.size()) < n) {
      if (!interval && below(rng, 3) == 0) {
        Rat lo(below(rng, 41) - 20, 1 + below(rng, 9));
        lo.canonicalize();
        cs.push_back(Constraint::interval(lo, lo + Rat(1, 1 + below(rng, 50))));
        interval = true;
        continue;
      }
      long p = primes[below(rng, 6)];
      if (!used.insert(p).second) continue;
      Rat c(below(rng, 61) - 30, 1 + below(rng, 12));
      c.canonicalize();
      Rat g(below(rng, 9) - 4);
      cs.push_back(below(rng, 2) ? Constraint::val_ge(p, c, g) : Constraint::val_gt(p, c, g));
    }
    try {
      Rat x = stone_solve(cs);
      for (const auto& c : cs) bad += !holds(c, x);
    } catch (const Error&) {
      ++bad;
    }
  }
  std::vector<Constraint> worked{Constraint::val_ge(2, 0, 4), Constraint::val_ge(3, 1, 3),
                                 Constraint::interval(0, Rat(1, 10))};
  Rat x = stone_solve(worked);
  bool worked_ok = true;
  for (const auto& c : worked) worked_ok = worked_ok && holds(c, x);
  std::ostringstream d;
  d << "100 random systems, " << bad << " unverified; worked example x = " << to_string(x)
    << (worked_ok ? " verified" : " NOT verified");
  return {bad == 0 && worked_ok, d.str()};
}

// 8. Shattering by sign and branch choices.
Outcome shattering() {
  auto t0 = Clock::now();
  auto r2 = ip_shatter_demo(2, 5);
  auto r3 = ip_shatter_demo(3, 5);
  double secs = seconds_since(t0);
  std::ostringstream d;
  d << "m=2: " << r2.realized.size() << "/4 subsets, m=3: " << r3.realized.size() << "/8 subsets, twists "
    << (r2.twists_consistent && r3.twists_consistent ? "consistent" : "inconsistent") << ", " << secs << " s";
  return {r2.all_subsets() && r3.all_subsets() && r2.twists_consistent && r3.twists_consistent && secs < 120,
          d.str()};
}

// 9. Rows of valuation conditions and their path witnesses.
Outcome burden() {
  auto r = burden_pattern_demo({2, 3, 5}, 3, 4);
  int rows = 0;
  for (bool b : r.row_inconsistent) rows += b;
  // Re-verify each witness independently.
  int verified = 0;
  for (const auto& path : r.paths) {
    bool ok = path.verified;
    for (size_t i = 0; i < r.primes.size(); ++i) {
      ok = ok && valuation(path.solver_witness, Integer(r.primes[i])) == path.eta[i];
      ok = ok && valuation(path.product_witness, Integer(r.primes[i])) == path.eta[i];
    }
    verified += ok;
  }
  std::ostringstream d;
  d << verified << "/" << r.paths.size() << " paths witnessed, " << rows << "/3 rows 2-inconsistent";
  return {verified == 64 && r.paths.size() == 64 && rows == 3, d.str()};
}

// 10. Branches of x^2 - y near 1/2.
Outcome dichotomy() {
  std::mt19937_64 rng(1010);
  int passed = 0, total = 0;
  for (long p : {5L, 13L})
    for (int k = 0; k < 25; ++k, ++total) {
      int v = 1 + k % 3;
      // y = 1/4 + p^v u / w with u, w prime to p.
      long u = 0, w = 0;
      while (u % p == 0) u = below(rng, 199) - 99;
      while (w % p == 0) w = 1 + below(rng, 50);
      Rat y = Rat(1, 4) + Rat(Integer(ipow(Integer(p), v)) * u, w);
      y.canonicalize();
      try {
        passed += newton_dichotomy_check(y, p);
      } catch (const Error&) {
      }
    }
  std::ostringstream d;
  d << passed << "/" << total << " sampled (y, p) pass";
  return {passed == total && total == 50, d.str()};
}

// Brute-force root existence in Z_p for a monic integer polynomial: lift
// residues digit by digit and stop at a Hensel-certified approximation.
long vp(Integer x, long p) {
  if (x == 0) return 1000;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

Integer eval_int(const std::vector<long>& c, const Integer& x) {
  Integer acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::optional<bool> padic_root_brute(const std::vector<long>& c, long p) {
  std::vector<long> dc;
  for (size_t i = 1; i < c.size(); ++i) dc.push_back(static_cast<long>(i) * c[i]);
  std::vector<Integer> level;
  for (long r = 0; r < p; ++r)
    if (vp(eval_int(c, r), p) >= 1) level.emplace_back(r);
  Integer pk = p;
  for (int k = 1; k <= 40; ++k) {
    if (level.empty()) return false;
    std::vector<Integer> next;
    for (const auto& x : level) {
      long vf = vp(eval_int(c, x), p), vd = vp(eval_int(dc, x), p);
      if (vf > 2 * vd) return true;
      for (long t = 0; t < p; ++t) {
        Integer y = x + pk * t;
        if (vp(eval_int(c, y), p) >= k + 1) next.push_back(y);
      }
    }
    level = std::move(next);
    pk *= p;
  }
  return std::nullopt;
}

bool has_integer_root(const std::vector<long>& c) {
  long c0 = c[0];
  if (c0 == 0) return true;
  for (long d = 1; d <= std::labs(c0); ++d) {
    if (c0 % d) continue;
    for (long x : {d, -d})
      if (eval_int(c, x) == 0) return true;
  }
  return false;
}

// 11. Local root existence oracle against brute force.
Outcome a1_oracle() {
  auto t0 = Clock::now();
  const std::vector<PlaceSpec> all{PlaceSpec::rcf(), PlaceSpec::pcf(3), PlaceSpec::pcf(5), PlaceSpec::pcf(7)};
  BaseStructure full{all};
  long polys = 0, disagreements = 0, undecided = 0, clause_checks = 0;
  std::mt19937_64 rng(1111);
  auto check = [&](const std::vector<long>& c) {
    if (has_integer_root(c)) return;  // reducible over Q for degree <= 3
    std::vector<Rat> rc(c.begin(), c.end());
    Poly f(rc);
    ++polys;
    std::vector<bool> brute;
    long a = c.size() == 3 ? c[1] : 0;
    brute.push_back(c.size() == 4 || a * a - 4 * c[0] > 0);
    for (long p : {3L, 5L, 7L}) {
      auto r = padic_root_brute(c, p);
      if (!r) {
        ++undecided;
        return;
      }
      brute.push_back(*r);
    }
    A1Report rep = a1prime_oracle(f, full);
    for (size_t i = 0; i < all.size(); ++i)
      if (rep.per_place[i].second != brute[i]) ++disagreements;
    // A random sub-base: the clause holds iff some place has no root.
    unsigned mask = 1 + below(rng, 15);
    BaseStructure sub;
    bool expect = false;
    for (size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) {
        sub.places.push_back(all[i]);
        expect = expect || !brute[i];
      }
    ++clause_checks;
    if (a1prime_oracle(f, sub).a1_clause_met != expect) ++disagreements;
  };
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b) {
      check({b, a, 1});
      for (long c0 = -20; c0 <= 20; ++c0) check({c0, b, a, 1});
    }
  std::ostringstream d;
  d << polys << " irreducible quadratics and cubics, " << clause_checks << " sub-base clause checks, "
    << disagreements << " disagreements, " << undecided << " undecided by brute force, "
    << seconds_since(t0) << " s";
  return {disagreements == 0 && undecided == 0, d.str()};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "Keisler measure laws", keisler_laws},
      {2, "worked measure value", worked_measure},
      {3, "closure independence", closure_independence},
      {4, "concentration and positivity", concentration},
      {5, "transition floor", transition_floor},
      {6, "Monte-Carlo consistency", monte_carlo},
      {7, "weak approximation solver", stone},
      {8, "IP shattering", shattering},
      {9, "burden pattern", burden},
      {10, "Newton dichotomy", dichotomy},
      {11, "A1' oracle vs brute force", a1_oracle},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
