#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fqt/local.hpp"

namespace fqt {

/// Places where the quaternion algebra (a, b) over F_q(t) does not split,
/// in canonical order (finite places first, infinity last).
struct RamificationSet {
  RatFunc a;
  RatFunc b;
  std::vector<Place> places;

  bool contains(const Place& v) const;
};

struct DeltaOptions {
  /// Development guard: additionally evaluate the symbol at every finite
  /// place of degree <= scan_degree, not just the supports of a and b.
  std::size_t scan_degree = 0;
};

/// supp(a) u supp(b) u {inf}, canonical order.
std::vector<Place> candidate_places(const RatFunc& a, const RatFunc& b);

/// Throws DomainError on a zero argument.
RamificationSet delta_set(const RatFunc& a, const RatFunc& b, const DeltaOptions& options = {});

/// Product of the Hilbert symbols over supp(a) u supp(b) u {inf} equals +1.
bool reciprocity_check(const RatFunc& a, const RatFunc& b);

/// A fixed, indexed list of places, used to precompute local data for many
/// elements at once.
class PlaceTable {
 public:
  PlaceTable(const FieldCtx& field, std::vector<Place> places);

  /// All finite places of degree <= max_degree followed by infinity.
  static PlaceTable up_to_degree(const FieldCtx& field, std::size_t max_degree);

  std::size_t size() const { return places_.size(); }
  const Place& operator[](std::size_t i) const { return places_[i]; }
  const std::vector<Place>& places() const { return places_; }
  /// Index of v, or size() when v is not in the table.
  std::size_t index_of(const Place& v) const;
  /// Whether -1 is a square in the residue field at index i.
  bool minus_one_is_square(std::size_t i) const { return minus_one_square_[i]; }

 private:
  std::vector<Place> places_;
  std::vector<bool> minus_one_square_;
  std::map<Place, std::size_t> index_;
};

/// Valuation and square character of the unit part of a nonzero x at every
/// place of a table.
struct LocalProfile {
  std::vector<std::int64_t> valuations;
  std::vector<bool> unit_is_square;
};

/// Throws DomainError when x is zero or has a prime factor outside the table.
LocalProfile local_profile(const RatFunc& x, const PlaceTable& table);

/// Ramification set from precomputed profiles, as sorted table indices. Uses
/// the bimultiplicativity of the tame symbol: only parities of valuations and
/// square characters of units enter.
std::vector<std::size_t> delta_indices(const LocalProfile& a, const LocalProfile& b,
                                       const PlaceTable& table);

}  // namespace fqt
