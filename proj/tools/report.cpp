#include "report.hpp"

#include "fqt/text.hpp"

namespace fqt::cli {

std::string to_string(Orientation o) {
  switch (o) {
    case Orientation::kNone:
      return "none";
    case Orientation::kFirst:
      return "first";
    case Orientation::kSecond:
      return "second";
    case Orientation::kBoth:
      return "both";
  }
  return "none";
}

json places_json(const std::vector<Place>& places) {
  json out = json::array();
  for (const Place& v : places) out.push_back(format(v));
  return out;
}

json symbol_json(const RatFunc& a, const RatFunc& b, const Place& v, const TameSymbol& s) {
  return {{"a", format(a)},       {"b", format(b)},
          {"place", format(v)},   {"m", s.m},
          {"n", s.n},             {"unit_residue", format(s.unit_residue)},
          {"value", s.value.value()}};
}

json delta_json(const RamificationSet& delta, bool reciprocity) {
  return {{"a", format(delta.a)},
          {"b", format(delta.b)},
          {"delta", places_json(delta.places)},
          {"reciprocity", reciprocity}};
}

json witness_json(const WitnessPair& w) {
  return {{"place", format(w.target)},
          {"a", format(w.pair.a)},
          {"b", format(w.pair.b)},
          {"d", format(w.d)},
          {"orientation", to_string(w.pair.orientation)},
          {"delta", places_json(w.delta.places)}};
}

json verify_json(const TheoremReport& r) {
  json ce = json::array();
  for (const Counterexample& c : r.counterexamples) {
    ce.push_back({{"x", c.x}, {"a", c.a}, {"b", c.b}, {"reason", c.reason}});
  }
  return {{"q", r.q},
          {"deg_bound", r.deg_bound},
          {"members_checked", r.members_checked},
          {"nonmembers_checked", r.nonmembers_checked},
          {"pairs_used", r.pairs_used},
          {"grid_pairs", r.grid_pairs},
          {"witness_pairs", r.witness_pairs},
          {"distinct_delta_sets", r.distinct_delta_sets},
          {"counterexamples", std::move(ce)}};
}

json formula_json(const UniversalDefinition& def) {
  const QuantifierReport& r = def.report;
  json items = json::array();
  for (const QuantifierItem& item : r.items) {
    items.push_back({{"name", item.name}, {"count", item.count}});
  }
  json free = json::array();
  for (const std::string& v : free_variables(def.formula)) free.push_back(v);
  return {{"total", r.total},
          {"phi_total", r.phi_total},
          {"restriction_budget", r.restriction_budget},
          {"restricted_total", r.restricted_total},
          {"items", std::move(items)},
          {"consistent", r.consistent()},
          {"prenex_class", to_string(r.prenex_class)},
          {"parameters", r.parameters},
          {"subject", def.subject},
          {"free_variables", std::move(free)},
          {"notes", r.notes},
          {"sexpr", to_sexpr(def.formula)}};
}

}  // namespace fqt::cli
