#pragma once

#include <json.hpp>

#include "fqt/definability.hpp"
#include "fqt/formula.hpp"
#include "fqt/local.hpp"

namespace fqt::cli {

using nlohmann::json;

json places_json(const std::vector<Place>& places);
json symbol_json(const RatFunc& a, const RatFunc& b, const Place& v, const TameSymbol& s);
json delta_json(const RamificationSet& delta, bool reciprocity);
json witness_json(const WitnessPair& w);
json verify_json(const TheoremReport& r);
json formula_json(const UniversalDefinition& def);
std::string to_string(Orientation o);

}  // namespace fqt::cli
