#include "mvf/approx/stone.hpp"

#include <map>
#include <optional>

#include "mvf/exact/crt.hpp"
#include "mvf/errors.hpp"

namespace mvf {

Constraint Constraint::val_ge(long p, Rat center, Rat bound) {
  Constraint c;
  c.kind = Kind::Valuation;
  c.prime = p;
  c.center = std::move(center);
  c.bound = std::move(bound);
  return c;
}

Constraint Constraint::val_gt(long p, Rat center, Rat bound) {
  Constraint c = val_ge(p, std::move(center), std::move(bound));
  c.strict = true;
  return c;
}

Constraint Constraint::interval(Rat lo, Rat hi) {
  Constraint c;
  c.kind = Kind::Interval;
  c.lo = std::move(lo);
  c.hi = std::move(hi);
  return c;
}

Integer Constraint::integral_bound() const {
  // The value group of Q at p is Z.
  return strict ? Integer(floor_rat(bound) + 1) : ceil_rat(bound);
}

bool Constraint::satisfied_by(const Rat& x) const {
  if (kind == Kind::Interval) return lo < x && x < hi;
  Rat d = x - center;
  if (d == 0) return true;
  Rat v(valuation(d, prime));
  return strict ? v > bound : v >= bound;
}

std::string Constraint::to_string() const {
  if (kind == Kind::Interval) return mvf::to_string(lo) + " < x < " + mvf::to_string(hi);
  return "v_" + prime.get_str() + "(x - " + mvf::to_string(center) + ") " + (strict ? ">" : ">=") +
         " " + mvf::to_string(bound);
}

bool operator==(const Constraint& a, const Constraint& b) {
  return a.kind == b.kind && a.prime == b.prime && a.center == b.center && a.bound == b.bound &&
         a.strict == b.strict && a.lo == b.lo && a.hi == b.hi;
}

namespace {

struct Ball {
  Rat center;
  Integer radius;  // v_p(x - center) >= radius
};

}  // namespace

Rat stone_solve(const std::vector<Constraint>& constraints) {
  if (constraints.empty()) return Rat(0);
  std::optional<std::pair<Rat, Rat>> window;
  std::map<Integer, Ball> balls;
  for (const auto& c : constraints) {
    if (c.kind == Constraint::Kind::Interval) {
      if (!(c.lo < c.hi)) fail(ErrorCode::InvalidArgument, "empty interval " + c.to_string());
      if (!window) {
        window = std::make_pair(c.lo, c.hi);
      } else {
        window->first = std::max(window->first, c.lo);
        window->second = std::min(window->second, c.hi);
        if (!(window->first < window->second))
          fail(ErrorCode::InconsistentSamePlace, "real intervals do not intersect");
      }
      continue;
    }
    if (!is_prime(c.prime)) fail(ErrorCode::InvalidArgument, "valuation constraint needs a prime");
    Ball b{c.center, c.integral_bound()};
    auto it = balls.find(c.prime);
    if (it == balls.end()) {
      balls.emplace(c.prime, b);
      continue;
    }
    // Two balls meet iff one contains the other; keep the smaller one.
    Ball& a = it->second;
    Rat gap = a.center - b.center;
    if (gap != 0 && Integer(valuation(gap, c.prime)) < std::min(a.radius, b.radius))
      fail(ErrorCode::InconsistentSamePlace,
           "disjoint balls at p = " + c.prime.get_str() + ": " + c.to_string());
    if (b.radius > a.radius) a = b;
  }

  // x = u / (P * D): P carries the allowed p-power denominators, D = 1 mod M
  // is coprime to every prime, so the residue conditions on u do not depend
  // on D and only D is scaled to reach the real window.
  Integer P = 1;
  std::map<Integer, Integer> shift;
  for (const auto& [p, b] : balls) {
    Integer s = 0;
    if (b.radius < 0) s = -b.radius;
    if (b.center != 0) {
      Integer vc(valuation(b.center, p));
      if (vc < 0 && -vc > s) s = -vc;
    }
    shift[p] = s;
    P *= ipow(p, s.get_ui());
  }
  Integer M = 1;
  std::vector<Congruence> cong;
  for (const auto& [p, b] : balls) {
    // Every ball prime enters M, so D = 1 mod M stays a p-adic unit.
    Integer e = std::max(Integer(b.radius + shift[p]), Integer(1));
    Integer mod_pe = ipow(p, e.get_ui());
    // P * center is p-integral; reduce it modulo p^e.
    Integer r = mod_rat(b.center * Rat(P), mod_pe);
    cong.push_back({mod_pe, r});
    M *= mod_pe;
  }
  Integer r = cong.empty() ? Integer(0) : crt(cong).residue;

  auto finish = [&](const Integer& u, const Integer& D) {
    Rat x = make_rat(u, P * D);
    for (const auto& c : constraints)
      if (!c.satisfied_by(x))
        fail(ErrorCode::InvalidArgument, "internal: solution " + to_string(x) + " violates " + c.to_string());
    return x;
  };

  if (!window) return finish(r > 0 ? r : M, Integer(1));

  Integer t = 0;
  for (int round = 0; round < 4096; ++round) {
    Integer D = 1 + M * t;
    // Smallest u = r mod M above lo * P * D.
    Rat lower = window->first * Rat(P * D);
    Integer k = floor_rat((lower - Rat(r)) / Rat(M)) + 1;
    Integer u = r + M * k;
    if (Rat(u) < window->second * Rat(P * D)) return finish(u, D);
    t = t == 0 ? Integer(1) : Integer(t * 10);
  }
  fail(ErrorCode::InvalidArgument, "internal: denominator search did not terminate");
}

Rat infinitesimal(const BaseStructure& base, const Rat& scale, int valuation_bound) {
  if (scale <= 0) fail(ErrorCode::PreconditionViolated, "infinitesimal needs a positive scale");
  std::vector<Constraint> cs{Constraint::interval(Rat(0), scale)};
  for (const auto& p : base.places)
    if (p.is_valued())
      cs.push_back(Constraint::val_ge(p.prime.get_si(), Rat(0), Rat(valuation_bound)));
  return stone_solve(cs);
}

}  // namespace mvf
