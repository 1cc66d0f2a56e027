#include "mvf/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mvf/errors.hpp"

namespace mvf {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

Json mask_members(const GaloisClosure& c, Mask h) {
  Json a = Json::array();
  for (int g : c.members(h)) a.push_back(g);
  return a;
}

}  // namespace

Json rat_to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(Integer(std::to_string(j.get<long long>())));
  if (!j.is_string()) bad("rational must be a \"num/den\" string or an integer");
  return parse_rat(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(rat_to_json(c));
  return a;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficients, constant term first");
  std::vector<Rat> c;
  for (const auto& x : j) c.push_back(rat_from_json(x));
  return Poly(std::move(c));
}

Json place_to_json(const PlaceSpec& s) {
  Json j;
  j["kind"] = theory_name(s.kind);
  if (s.kind != Theory::RCF) j["p"] = s.prime.get_si();
  return j;
}

PlaceSpec place_from_json(const Json& j) {
  std::string k = str_field(j, "kind");
  PlaceSpec s;
  if (k == "RCF") {
    s = PlaceSpec::rcf();
  } else if (k == "PCF" || k == "ACVF") {
    s.kind = k == "PCF" ? Theory::PCF : Theory::ACVF;
    s.prime = Integer(int_field(j, "p"));
  } else {
    bad("unknown place kind \"" + k + "\" (expected RCF, PCF or ACVF)");
  }
  return s;
}

Json base_to_json(const BaseStructure& b) {
  Json a = Json::array();
  for (const auto& p : b.places) a.push_back(place_to_json(p));
  Json j;
  j["places"] = a;
  return j;
}

BaseStructure base_from_json(const Json& j) {
  const Json& a = field(j, "places");
  if (!a.is_array()) bad("\"places\" must be an array");
  BaseStructure b;
  for (const auto& p : a) b.places.push_back(place_from_json(p));
  try {
    b.validate();
  } catch (const Error& e) {
    bad(std::string("invalid base structure: ") + e.what());
  }
  return b;
}

Json formula_to_json(const QFFormula& f) {
  Json j;
  switch (f.op()) {
    case QFFormula::Op::True: j["op"] = "true"; break;
    case QFFormula::Op::False: j["op"] = "false"; break;
    case QFFormula::Op::Not:
      j["op"] = "not";
      j["args"] = Json::array({formula_to_json(f.children()[0])});
      break;
    case QFFormula::Op::And:
    case QFFormula::Op::Or: {
      j["op"] = f.op() == QFFormula::Op::And ? "and" : "or";
      Json a = Json::array();
      for (const auto& k : f.children()) a.push_back(formula_to_json(k));
      j["args"] = a;
      break;
    }
    case QFFormula::Op::Atom: {
      const Atom& a = f.atom_value();
      j["op"] = atom_kind_name(a.kind);
      if (a.kind != Atom::Kind::Zero && a.kind != Atom::Kind::Nonzero) j["index"] = a.index;
      if (a.kind == Atom::Kind::ValGe || a.kind == Atom::Kind::ValGt) {
        j["t1"] = poly_to_json(a.t1);
        j["t2"] = poly_to_json(a.t2);
      } else {
        j["t"] = poly_to_json(a.t1);
      }
      if (a.kind == Atom::Kind::NthPower) j["n"] = a.n;
      break;
    }
  }
  return j;
}

QFFormula formula_from_json(const Json& j) {
  std::string op = str_field(j, "op");
  auto args = [&]() {
    const Json& a = field(j, "args");
    if (!a.is_array()) bad("\"args\" must be an array");
    std::vector<QFFormula> out;
    for (const auto& x : a) out.push_back(formula_from_json(x));
    return out;
  };
  if (op == "true") return QFFormula::truth();
  if (op == "false") return QFFormula::falsity();
  if (op == "and") return QFFormula::conj(args());
  if (op == "or") return QFFormula::disj(args());
  if (op == "not") {
    auto a = args();
    if (a.size() != 1) bad("\"not\" takes exactly one argument");
    return QFFormula::negation(std::move(a[0]));
  }
  auto index = [&]() { return static_cast<int>(int_field(j, "index")); };
  if (op == "zero") return QFFormula::atom(Atom::zero(poly_from_json(field(j, "t"))));
  if (op == "nonzero") return QFFormula::atom(Atom::nonzero(poly_from_json(field(j, "t"))));
  if (op == "gt") return QFFormula::atom(Atom::gt(index(), poly_from_json(field(j, "t"))));
  if (op == "val_ge" || op == "val_gt") {
    Poly a = poly_from_json(field(j, "t1")), b = poly_from_json(field(j, "t2"));
    return QFFormula::atom(op == "val_ge" ? Atom::val_ge(index(), a, b) : Atom::val_gt(index(), a, b));
  }
  if (op == "nth_power") {
    long n = int_field(j, "n");
    if (n < 1) bad("\"n\" must be positive");
    return QFFormula::atom(Atom::nth_power(index(), poly_from_json(field(j, "t")), static_cast<unsigned>(n)));
  }
  bad("unknown formula op \"" + op + "\"");
}

Json sentence_to_json(const Sentence& s) {
  Json j;
  j["witness"] = poly_to_json(s.witness);
  j["psi"] = formula_to_json(s.psi);
  return j;
}

Sentence sentence_from_json(const Json& j) {
  Sentence s;
  s.witness = poly_from_json(field(j, "witness"));
  s.psi = j.contains("psi") ? formula_from_json(j["psi"]) : QFFormula::truth();
  if (s.witness.degree() < 1 || s.witness.lead() != 1) bad("witness must be monic of degree >= 1");
  return s;
}

Json expr_to_json(const SentenceExpr& e) {
  if (e.op() == SentenceExpr::Op::Leaf) return sentence_to_json(e.sentence());
  Json j;
  j["op"] = e.op() == SentenceExpr::Op::Not ? "not" : e.op() == SentenceExpr::Op::And ? "and" : "or";
  Json a = Json::array();
  for (const auto& k : e.children()) a.push_back(expr_to_json(k));
  j["args"] = a;
  return j;
}

SentenceExpr expr_from_json(const Json& j) {
  if (j.is_object() && j.contains("witness")) return SentenceExpr::leaf(sentence_from_json(j));
  std::string op = str_field(j, "op");
  const Json& a = field(j, "args");
  if (!a.is_array()) bad("\"args\" must be an array");
  if (op == "not") {
    if (a.size() != 1) bad("\"not\" takes exactly one argument");
    return SentenceExpr::negation(expr_from_json(a[0]));
  }
  if (op != "and" && op != "or") bad("unknown sentence op \"" + op + "\"");
  if (a.size() < 2) bad("\"" + op + "\" needs at least two arguments");
  SentenceExpr e = expr_from_json(a[0]);
  for (size_t i = 1; i < a.size(); ++i)
    e = op == "and" ? SentenceExpr::conj(e, expr_from_json(a[i])) : SentenceExpr::disj(e, expr_from_json(a[i]));
  return e;
}

Json constraint_to_json(const Constraint& c) {
  Json j;
  if (c.kind == Constraint::Kind::Interval) {
    j["kind"] = "interval";
    j["lo"] = rat_to_json(c.lo);
    j["hi"] = rat_to_json(c.hi);
  } else {
    j["kind"] = c.strict ? "val_gt" : "val_ge";
    j["p"] = c.prime.get_si();
    j["center"] = rat_to_json(c.center);
    j["bound"] = rat_to_json(c.bound);
  }
  return j;
}

Constraint constraint_from_json(const Json& j) {
  std::string k = str_field(j, "kind");
  if (k == "interval") return Constraint::interval(rat_from_json(field(j, "lo")), rat_from_json(field(j, "hi")));
  if (k == "val_ge" || k == "val_gt") {
    long p = int_field(j, "p");
    Rat c = j.contains("center") ? rat_from_json(j["center"]) : Rat(0);
    Rat b = rat_from_json(field(j, "bound"));
    return k == "val_ge" ? Constraint::val_ge(p, c, b) : Constraint::val_gt(p, c, b);
  }
  bad("unknown constraint kind \"" + k + "\" (expected val_ge, val_gt or interval)");
}

std::vector<Constraint> constraints_from_json(const Json& j) {
  const Json& a = j.is_array() ? j : field(j, "constraints");
  if (!a.is_array()) bad("\"constraints\" must be an array");
  std::vector<Constraint> out;
  for (const auto& c : a) out.push_back(constraint_from_json(c));
  return out;
}

Json state_to_json(const ChainContext& ctx, const State& s) {
  const auto& c = *ctx.closure();
  Json h;
  h["order"] = popcount(s.h);
  Json gens = Json::array();
  for (int g : subgroup_generators(c, s.h)) gens.push_back(c.describe_element(g));
  h["generators"] = gens;
  h["members"] = mask_members(c, s.h);
  Json data = Json::array();
  for (int i = 0; i < ctx.size(); ++i) {
    Json d = place_to_json(ctx.base()[i]);
    d["index"] = i;
    Json places = Json::array();
    for (int x = 0; x < ctx.places(i).count(); ++x)
      if (s.orbits[i] >> x & 1) places.push_back(x);
    d["places"] = places;
    data.push_back(d);
  }
  Json j;
  j["H"] = h;
  j["data"] = data;
  return j;
}

Json distribution_to_json(const ChainContext& ctx, const Distribution& d) {
  Json a = Json::array();
  for (const auto& [s, w] : d) {
    Json e;
    e["weight"] = rat_to_json(w);
    e["state"] = state_to_json(ctx, s);
    a.push_back(e);
  }
  return a;
}

Json closure_to_json(const GaloisClosure& c) {
  Json j;
  j["generator"] = poly_to_json(c.generator_poly());
  j["defining_poly"] = poly_to_json(c.field()->defining_poly());
  Json roots = Json::array();
  for (const auto& r : c.roots()) roots.push_back(poly_to_json(r.rep()));
  j["roots"] = roots;
  Json perms = Json::array();
  for (const auto& p : c.permutations()) perms.push_back(p);
  j["permutations"] = perms;
  return j;
}

ClosurePtr closure_from_json(const Json& j) {
  Poly gen = poly_from_json(field(j, "generator"));
  ClosurePtr c = GaloisClosure::build(gen);
  Json again = closure_to_json(*c);
  for (const char* k : {"defining_poly", "roots", "permutations"})
    if (j.contains(k) && j[k] != again[k])
      fail(ErrorCode::ClosureMismatch, std::string("closure field \"") + k + "\" does not match the rebuilt closure");
  return c;
}

ECDescription ec_description_from_json(const Json& j) {
  const Json& a = field(j, "places");
  if (!a.is_array() || a.empty()) bad("\"places\" must be a nonempty array");
  ECDescription d;
  for (const auto& p : a) d.places.push_back(place_from_json(p));
  return d;
}

Json to_json(const A1Report& r) {
  Json j;
  j["poly"] = poly_to_json(r.poly);
  Json a = Json::array();
  for (const auto& [spec, has] : r.per_place) {
    Json e = place_to_json(spec);
    e["has_root"] = has;
    a.push_back(e);
  }
  j["per_place"] = a;
  j["a1_clause_met"] = r.a1_clause_met;
  return j;
}

Json to_json(const ECReport& r) {
  Json j;
  j["t1_model_ok"] = r.t1_model_ok;
  j["nontrivial"] = r.nontrivial;
  j["pairwise_distinct_topologies"] = r.pairwise_distinct_topologies;
  j["verdict"] = r.verdict;
  return j;
}

Json to_json(const ShatterReport& r) {
  Json j;
  j["m"] = r.m;
  j["p"] = r.prime.get_si();
  Json a = Json::array();
  for (const auto& x : r.a_values) a.push_back(rat_to_json(x));
  j["a_values"] = a;
  j["epsilon"] = rat_to_json(r.epsilon);
  j["closure_degree"] = r.closure_degree;
  j["maximal_states"] = r.maximal_states;
  Json rs = Json::array();
  for (const auto& s : r.realized) {
    Json e;
    Json members = Json::array();
    for (int k = 0; k < r.m; ++k)
      if (s.subset >> k & 1) members.push_back(k);
    e["subset"] = members;
    e["state"] = s.state;
    rs.push_back(e);
  }
  j["realized_subsets"] = rs;
  j["all_subsets_realized"] = r.all_subsets();
  j["twists_consistent"] = r.twists_consistent;
  return j;
}

Json to_json(const BurdenReport& r) {
  Json j;
  j["primes"] = r.primes;
  j["width"] = r.width;
  j["rows_2_inconsistent"] = r.row_inconsistent;
  Json ps = Json::array();
  for (const auto& p : r.paths) {
    Json e;
    e["eta"] = p.eta;
    e["product_witness"] = rat_to_json(p.product_witness);
    e["solver_witness"] = rat_to_json(p.solver_witness);
    e["verified"] = p.verified;
    ps.push_back(e);
  }
  j["paths"] = ps;
  j["all_paths_witnessed"] = r.all_witnessed();
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

}  // namespace mvf
