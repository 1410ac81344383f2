#include "fqt/ramification.hpp"

#include <algorithm>
#include <set>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"

namespace fqt {

bool RamificationSet::contains(const Place& v) const {
  return std::find(places.begin(), places.end(), v) != places.end();
}

std::vector<Place> candidate_places(const RatFunc& a, const RatFunc& b) {
  std::set<Place> places;
  for (const RatFunc* x : {&a, &b}) {
    for (auto& v : support(*x)) places.insert(std::move(v));
  }
  places.insert(Place::infinity());
  return {places.begin(), places.end()};
}

RamificationSet delta_set(const RatFunc& a, const RatFunc& b, const DeltaOptions& options) {
  if (a.is_zero() || b.is_zero()) throw DomainError("symbol undefined for zero");
  std::vector<Place> candidates = candidate_places(a, b);
  if (options.scan_degree > 0) {
    std::set<Place> all(candidates.begin(), candidates.end());
    for (std::size_t d = 1; d <= options.scan_degree; ++d) {
      for (auto& f : monic_irreducibles(a.field(), d)) all.insert(Place::trusted(std::move(f)));
    }
    candidates.assign(all.begin(), all.end());
  }
  RamificationSet out{a, b, {}};
  for (auto& v : candidates) {
    if (!hilbert_symbol(a, b, v).is_plus()) out.places.push_back(std::move(v));
  }
  return out;
}

bool reciprocity_check(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) throw DomainError("symbol undefined for zero");
  SymbolValue product = SymbolValue::plus();
  for (const auto& v : candidate_places(a, b)) product = product * hilbert_symbol(a, b, v);
  return product.is_plus();
}

PlaceTable::PlaceTable(const FieldCtx& field, std::vector<Place> places)
    : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
  for (std::size_t i = 0; i < places_.size(); ++i) {
    index_.emplace(places_[i], i);
    // -1 is a square in F_Q, Q = q^deg, iff Q = 1 mod 4.
    minus_one_square_.push_back(field.q() % 4 == 1 || places_[i].degree() % 2 == 0);
  }
}

std::size_t PlaceTable::index_of(const Place& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? places_.size() : it->second;
}

PlaceTable PlaceTable::up_to_degree(const FieldCtx& field, std::size_t max_degree) {
  std::vector<Place> places;
  for (std::size_t d = 1; d <= max_degree; ++d) {
    for (auto& f : monic_irreducibles(field, d)) places.push_back(Place::trusted(std::move(f)));
  }
  places.push_back(Place::infinity());
  return PlaceTable(field, std::move(places));
}

LocalProfile local_profile(const RatFunc& x, const PlaceTable& table) {
  if (x.is_zero()) throw DomainError("local profile of zero");
  for (const auto& v : support(x)) {
    if (table.index_of(v) == table.size()) {
      throw DomainError("prime " + format(v) + " is outside the place table");
    }
  }
  LocalProfile out;
  out.valuations.reserve(table.size());
  out.unit_is_square.reserve(table.size());
  for (const auto& v : table.places()) {
    out.valuations.push_back(*valuation(x, v));
    out.unit_is_square.push_back(residue_is_square(unit_residue(x, v), v));
  }
  return out;
}

std::vector<std::size_t> delta_indices(const LocalProfile& a, const LocalProfile& b,
                                       const PlaceTable& table) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const bool m_odd = a.valuations[i] % 2 != 0;
    const bool n_odd = b.valuations[i] % 2 != 0;
    // (-1)^(mn) a^n / b^m is a nonsquare iff an odd number of these hold.
    bool nonsquare = false;
    if (m_odd && n_odd && !table.minus_one_is_square(i)) nonsquare = !nonsquare;
    if (n_odd && !a.unit_is_square[i]) nonsquare = !nonsquare;
    if (m_odd && !b.unit_is_square[i]) nonsquare = !nonsquare;
    if (nonsquare) out.push_back(i);
  }
  return out;
}

}  // namespace fqt
