#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mvf/approx/stone.hpp"
#include "mvf/chain/chain.hpp"
#include "mvf/chain/formula.hpp"
#include "mvf/experiments/experiments.hpp"

namespace mvf {

using Json = nlohmann::ordered_json;

// Rationals are "num/den" strings (integers may also be JSON numbers on
// input); polynomials are coefficient arrays, constant term first.
// Malformed input raises ParseError.
Json rat_to_json(const Rat& x);
Rat rat_from_json(const Json& j);
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json place_to_json(const PlaceSpec& s);
// No consistency check: ec-check descriptions may carry trivial valuations.
PlaceSpec place_from_json(const Json& j);
Json base_to_json(const BaseStructure& b);
BaseStructure base_from_json(const Json& j);

Json formula_to_json(const QFFormula& f);
QFFormula formula_from_json(const Json& j);
Json sentence_to_json(const Sentence& s);
Sentence sentence_from_json(const Json& j);
// A sentence object, or {"op": "not"|"and"|"or", "args": [...]}.
Json expr_to_json(const SentenceExpr& e);
SentenceExpr expr_from_json(const Json& j);

Json constraint_to_json(const Constraint& c);
Constraint constraint_from_json(const Json& j);
std::vector<Constraint> constraints_from_json(const Json& j);

Json state_to_json(const ChainContext& ctx, const State& s);
// Entries sorted by state order, weights as rational strings.
Json distribution_to_json(const ChainContext& ctx, const Distribution& d);

Json closure_to_json(const GaloisClosure& c);
// Rebuilds from the generator and checks roots and permutation table;
// ClosureMismatch if they differ.
ClosurePtr closure_from_json(const Json& j);

ECDescription ec_description_from_json(const Json& j);
Json to_json(const A1Report& r);
Json to_json(const ECReport& r);
Json to_json(const ShatterReport& r);
Json to_json(const BurdenReport& r);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace mvf
