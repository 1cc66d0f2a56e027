#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mvf/approx/stone.hpp"
#include "mvf/chain/chain.hpp"
#include "mvf/errors.hpp"
#include "mvf/exact/poly.hpp"
#include "mvf/experiments/experiments.hpp"
#include "mvf/io/json_io.hpp"

using namespace mvf;

namespace {

const char* kSchema = R"(
Input schemas (all rationals are "num/den" strings or JSON integers):

  base.json       {"places": [place, ...]}
    place         {"kind": "RCF"} | {"kind": "PCF", "p": prime} | {"kind": "ACVF", "p": prime}
                  Place indices are 0-based in order of appearance.

  sentence.json   Exists y: witness(y) = 0 and psi(y).
                  {"witness": poly, "psi": formula}
    poly          coefficient array, constant term first; the witness must be monic
    formula       {"op": "true"} | {"op": "false"}
                  {"op": "zero" | "nonzero", "t": poly}
                  {"op": "gt", "index": i, "t": poly}                  t(y) > 0, RCF index
                  {"op": "val_ge" | "val_gt", "index": i, "t1": poly, "t2": poly}
                                                                       v(t1) >= v(t2), valued index
                  {"op": "nth_power", "index": i, "t": poly, "n": n}    PCF index
                  {"op": "not", "args": [formula]}
                  {"op": "and" | "or", "args": [formula, ...]}
                  A sentence file may also be a boolean combination of sentences:
                  {"op": "not" | "and" | "or", "args": [sentence, ...]}

  closure.json    {"generator": poly, ...}; other fields as emitted by `chain` are
                  checked against the rebuilt closure.

  constraints.json  [constraint, ...] or {"constraints": [...]}
    constraint    {"kind": "val_ge" | "val_gt", "p": prime, "center": rat, "bound": rat}
                  {"kind": "interval", "lo": rat, "hi": rat}      lo < x < hi

  desc.json       {"places": [place, ...]}; places after the first must be ACVF,
                  "p": 0 denotes a trivial valuation.

Environment: MVF_PRECISION_CAP sets the default p-adic precision cap.
Exit codes: 0 success, 2 precondition or capacity error, 3 parse error.
Errors are reported as {"error": name, "message": text} on standard output.
)";

Json load(const std::string& arg) {
  std::string t = arg;
  size_t k = t.find_first_not_of(" \t\n");
  if (k != std::string::npos && (t[k] == '[' || t[k] == '{')) return parse_json_text(t);
  return read_json_file(arg);
}

ClosurePtr closure_for(const Poly& f, int degree_cap) {
  ClosureOptions opt;
  opt.degree_cap = degree_cap;
  return GaloisClosure::build(squarefree_part(f), opt);
}

struct Options {
  std::string base, sentence, closure, poly, constraints, desc, primes, y, output;
  bool exact = false;
  int samples = 0, max_steps = 10000, m = 2, width = 4, depth = 0, degree_cap = 24;
  uint64_t seed = 0;
  long p = 5, precision_cap = 0;
};

Json cmd_measure(const Options& o) {
  BaseStructure base = base_from_json(load(o.base));
  SentenceExpr e = expr_from_json(load(o.sentence));
  e.validate(base);
  ClosurePtr c = o.closure.empty() ? closure_for(e.witness_product(), o.degree_cap)
                                   : closure_from_json(load(o.closure));
  auto ctx = ChainContext::create(base, c);
  MeasureResult r = measure(e, ctx);
  Json states = Json::array();
  size_t k = 0;
  for (const auto& [s, w] : r.limit) {
    Json j;
    j["weight"] = rat_to_json(w);
    j["holds"] = static_cast<bool>(r.truth[k++]);
    j["state"] = state_to_json(*ctx, s);
    states.push_back(j);
  }
  Json out;
  out["P"] = rat_to_json(r.value);
  out["closure_degree"] = c->degree();
  out["states"] = states;
  return out;
}

Json cmd_chain(const Options& o) {
  BaseStructure base = base_from_json(load(o.base));
  ClosurePtr c;
  if (!o.closure.empty())
    c = closure_from_json(load(o.closure));
  else if (!o.poly.empty())
    c = closure_for(poly_from_json(load(o.poly)), o.degree_cap);
  else if (!o.sentence.empty())
    c = closure_for(expr_from_json(load(o.sentence)).witness_product(), o.degree_cap);
  else
    fail(ErrorCode::ParseError, "chain needs --closure, --poly or --sentence");
  auto ctx = ChainContext::create(base, c);
  Json out;
  out["closure"] = closure_to_json(*c);
  if (o.samples > 0) {
    auto freq = sample_frequencies(*ctx, o.seed, o.samples, o.max_steps);
    Json a = Json::array();
    for (const auto& [s, n] : freq) {
      Json j;
      j["count"] = n;
      j["frequency"] = rat_to_json(Rat(n) / o.samples);
      j["state"] = state_to_json(*ctx, s);
      a.push_back(j);
    }
    out["samples"] = o.samples;
    out["seed"] = o.seed;
    out["frequencies"] = a;
  } else {
    out["limit"] = distribution_to_json(*ctx, limit_distribution(*ctx));
  }
  return out;
}

Json cmd_solve(const Options& o) {
  auto cs = constraints_from_json(load(o.constraints));
  Rat x = stone_solve(cs);
  Json checks = Json::array();
  for (const auto& c : cs) {
    Json j = constraint_to_json(c);
    j["satisfied"] = c.satisfied_by(x);
    checks.push_back(j);
  }
  Json out;
  out["x"] = rat_to_json(x);
  out["checks"] = checks;
  return out;
}

std::vector<long> parse_primes(const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      fail(ErrorCode::ParseError, "bad prime list entry \"" + tok + "\"");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measures on existentially closed fields with several orderings and valuations"};
  app.footer(kSchema);
  app.require_subcommand(1);
  Options o;
  app.add_option("--precision-cap", o.precision_cap, "p-adic precision cap (overrides MVF_PRECISION_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", o.degree_cap, "maximum splitting field degree")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", o.output, "write the JSON result to this file");

  auto* measure = app.add_subcommand("measure", "measure of a sentence over a base structure");
  measure->add_option("--base", o.base, "base.json")->required();
  measure->add_option("--sentence", o.sentence, "sentence.json")->required();
  measure->add_option("--closure", o.closure, "closure.json (default: splitting field of the witness)");

  auto* chain = app.add_subcommand("chain", "limit distribution or sampled trajectories of the chain");
  chain->add_option("--base", o.base, "base.json")->required();
  chain->add_option("--closure", o.closure, "closure.json");
  chain->add_option("--poly", o.poly, "closure generator as a JSON coefficient array or file");
  chain->add_option("--sentence", o.sentence, "use the splitting field of this sentence's witness");
  auto* exact = chain->add_flag("--exact", o.exact, "exact limit distribution (default)");
  auto* sample = chain->add_option("--sample", o.samples, "number of sampled trajectories")
                     ->check(CLI::PositiveNumber);
  exact->excludes(sample);
  chain->add_option("--seed", o.seed, "sampling seed")->needs(sample);
  chain->add_option("--max-steps", o.max_steps, "step limit per trajectory")->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "rational point satisfying simultaneous local conditions");
  solve->add_option("--constraints", o.constraints, "constraints.json")->required();

  auto* a1 = app.add_subcommand("a1", "root existence of an irreducible polynomial in each local model");
  a1->add_option("--poly", o.poly, "JSON coefficient array or file")->required();
  a1->add_option("--base", o.base, "base.json")->required();

  auto* ec = app.add_subcommand("ec-check", "conditions for existential closedness of a described field");
  ec->add_option("--desc", o.desc, "desc.json")->required();

  auto* ip = app.add_subcommand("ip-demo", "shattering by square-root sign and branch choices");
  ip->add_option("--m", o.m, "number of parameters (1..3)");
  ip->add_option("--p", o.p, "prime of the valuation");

  auto* burden = app.add_subcommand("burden", "rows of valuation conditions and their path witnesses");
  burden->add_option("--primes", o.primes, "comma separated primes")->required();
  burden->add_option("--width", o.width, "columns per row")->check(CLI::PositiveNumber);
  burden->add_option("--depth", o.depth, "rows (default: number of primes)");

  auto* dich = app.add_subcommand("dichotomy", "branches of x^2 - y near 1/2");
  dich->add_option("--y", o.y, "rational y with v_p(y - 1/4) > 0")->required();
  dich->add_option("--p", o.p, "prime");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    Json err;
    err["error"] = "ParseError";
    err["message"] = e.what();
    std::cout << err.dump(2) << "\n";
    return 3;
  }

  if (o.precision_cap > 0) setenv("MVF_PRECISION_CAP", std::to_string(o.precision_cap).c_str(), 1);

  Json out;
  int code = 0;
  try {
    if (*measure) out = cmd_measure(o);
    else if (*chain) out = cmd_chain(o);
    else if (*solve) out = cmd_solve(o);
    else if (*a1) out = to_json(a1prime_oracle(poly_from_json(load(o.poly)), base_from_json(load(o.base))));
    else if (*ec) out = to_json(ec_check(ec_description_from_json(load(o.desc))));
    else if (*ip) out = to_json(ip_shatter_demo(o.m, o.p));
    else if (*burden) {
      auto primes = parse_primes(o.primes);
      out = to_json(burden_pattern_demo(primes, o.depth > 0 ? o.depth : static_cast<int>(primes.size()), o.width));
    } else if (*dich) {
      Rat y = parse_rat(o.y);
      out["y"] = rat_to_json(y);
      out["p"] = o.p;
      out["holds"] = newton_dichotomy_check(y, o.p);
    }
  } catch (const Error& e) {
    out = Json();
    out["error"] = e.name();
    out["message"] = e.what();
    code = e.code() == ErrorCode::ParseError ? 3 : 2;
  }

  std::string text = out.dump(2) + "\n";
  if (!o.output.empty() && code == 0) {
    std::ofstream f(o.output);
    if (!f) {
      std::cout << R"({"error": "ParseError", "message": "cannot write output file"})" << "\n";
      return 3;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return code;
}
