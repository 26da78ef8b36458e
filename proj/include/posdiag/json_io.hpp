#pragma once

// JSON forms of the domain types. Integers are written as JSON numbers when
// they fit in 64 bits and as decimal strings otherwise; both are accepted
// on input. Malformed documents raise Error{"ParseError"}.

#include <json.hpp>

#include <vector>

#include "posdiag/covers.hpp"
#include "posdiag/diagram.hpp"
#include "posdiag/presentation.hpp"
#include "posdiag/seifert.hpp"

namespace posdiag::json {

using Json = nlohmann::ordered_json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

Json to_json(const SeifertData& s);
SeifertData seifert_from_json(const Json& j);

Json to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json to_json(const Diagram& dg);
Diagram diagram_from_json(const Json& j);

Json to_json(const PermutationPair& p);
PermutationPair permutations_from_json(const Json& j);

Json to_json(const CoverSpec& c);
CoverSpec cover_spec_from_json(const Json& j);

Json to_json(const SnfResult& r);
Json to_json(const GenusReport& r);
Json to_json(const BaseCover& b);

/// {"lambda": odd int, "pairs": [{"alpha": a, "beta": b}, ...]}
struct BetaStarInput {
  Integer lambda;
  std::vector<BetaPair> pairs;
};
BetaStarInput beta_star_input_from_json(const Json& j);

/// Parses text, mapping syntax errors to Error{"ParseError"}.
Json parse(const std::string& text);

}  // namespace posdiag::json
