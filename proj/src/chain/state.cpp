#include "mvf/chain/state.hpp"

#include <map>
#include <sstream>

#include "mvf/errors.hpp"

namespace mvf {

bool operator==(const State& a, const State& b) { return a.h == b.h && a.orbits == b.orbits; }

bool operator<(const State& a, const State& b) {
  int pa = popcount(a.h), pb = popcount(b.h);
  if (pa != pb) return pa < pb;
  if (a.h != b.h) return a.h < b.h;
  return a.orbits < b.orbits;
}

std::shared_ptr<const ChainContext> ChainContext::create(const BaseStructure& base,
                                                         ClosurePtr closure) {
  base.validate();
  auto ctx = std::shared_ptr<ChainContext>(new ChainContext);
  ctx->base_ = base;
  ctx->closure_ = closure;
  std::map<Integer, PlaceSetPtr> by_prime;
  for (const auto& spec : base.places) {
    auto it = by_prime.find(spec.prime);
    if (it == by_prime.end()) {
      PlaceSetPtr ps = spec.kind == Theory::RCF ? PlaceSet::archimedean(closure)
                                                : PlaceSet::above(closure, spec.prime);
      it = by_prime.emplace(spec.prime, ps).first;
    }
    ctx->places_.push_back(it->second);
    std::vector<Mask> groups;
    for (int x = 0; x < it->second->count(); ++x)
      groups.push_back(spec.kind == Theory::ACVF ? Mask(1) : it->second->stabilizer(x));
    ctx->local_groups_.push_back(std::move(groups));
  }
  return ctx;
}

Mask ChainContext::local_group(int i, int x) const { return local_groups_[i][x]; }

namespace {

Mask orbit_of(const GaloisClosure& c, const PlaceSet& ps, Mask h, int x) {
  Mask o = 0;
  for (int g = 0; g < c.order(); ++g)
    if (h >> g & 1) o |= Mask(1) << ps.act(g, x);
  return o;
}

int lowest(Mask m) { return __builtin_ctzll(m); }

}  // namespace

State ChainContext::initial_state() const {
  State s;
  s.h = closure_->full_mask();
  for (int i = 0; i < size(); ++i) s.orbits.push_back(orbit_of(*closure_, places(i), s.h, 0));
  return s;
}

int ChainContext::representative(const State& s, int i) const {
  if (s.orbits[i] == 0) fail(ErrorCode::InvalidArgument, "state has an empty datum");
  return lowest(s.orbits[i]);
}

bool ChainContext::is_valid(const State& s) const {
  if (static_cast<int>(s.orbits.size()) != size() || !closure_->is_subgroup(s.h)) return false;
  for (int i = 0; i < size(); ++i) {
    if (s.orbits[i] == 0) return false;
    int x = lowest(s.orbits[i]);
    if (x >= places(i).count()) return false;
    if (orbit_of(*closure_, places(i), s.h, x) != s.orbits[i]) return false;
    Mask g = local_group(i, x);
    if ((g & s.h) != g) return false;
  }
  return true;
}

std::vector<ClosureDatum> ChainContext::local_closures(const State& s, int i) const {
  std::vector<ClosureDatum> out;
  const auto& c = *closure_;
  for (int x = 0; x < places(i).count(); ++x) {
    if (!(s.orbits[i] >> x & 1)) continue;
    ClosureDatum d;
    d.index = i;
    d.kind = base_[i].kind;
    d.place = x;
    d.stabilizer = local_group(i, x);
    if (d.kind == Theory::RCF)
      for (int g : c.members(d.stabilizer)) d.involution = g;
    out.push_back(d);
  }
  return out;
}

State ChainContext::successor_from_places(const State& s, const std::vector<int>& ys) const {
  Mask parts = 0;
  for (int i = 0; i < size(); ++i) parts |= local_group(i, ys[i]);
  State t;
  t.h = closure_->generate(parts) & s.h;
  for (int i = 0; i < size(); ++i) t.orbits.push_back(orbit_of(*closure_, places(i), t.h, ys[i]));
  return t;
}

State ChainContext::successor(const State& s, const std::vector<int>& sigma) const {
  std::vector<int> ys(size());
  for (int i = 0; i < size(); ++i) ys[i] = places(i).act(sigma[i], representative(s, i));
  return successor_from_places(s, ys);
}

State ChainContext::translate(int g, const State& s) const {
  State t;
  t.h = closure_->conjugate(g, s.h);
  for (int i = 0; i < size(); ++i) {
    Mask o = 0;
    for (int x = 0; x < places(i).count(); ++x)
      if (s.orbits[i] >> x & 1) o |= Mask(1) << places(i).act(g, x);
    t.orbits.push_back(o);
  }
  return t;
}

std::vector<int> subgroup_generators(const GaloisClosure& c, Mask h) {
  std::vector<int> gens;
  Mask cur = 1;
  for (int g : c.members(h)) {
    if (cur >> g & 1) continue;
    gens.push_back(g);
    cur = c.generate(cur | Mask(1) << g);
  }
  return gens;
}

std::string ChainContext::describe(const State& s) const {
  std::ostringstream os;
  os << "|H|=" << popcount(s.h) << " H=<";
  auto gens = subgroup_generators(*closure_, s.h);
  for (size_t k = 0; k < gens.size(); ++k) os << (k ? ", " : "") << closure_->describe_element(gens[k]);
  os << ">";
  for (int i = 0; i < size(); ++i) {
    os << " " << base_[i].to_string() << ":{";
    bool first = true;
    for (int x = 0; x < places(i).count(); ++x)
      if (s.orbits[i] >> x & 1) {
        os << (first ? "" : ",") << x;
        first = false;
      }
    os << "}";
  }
  return os.str();
}

}  // namespace mvf
