#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "fqt/poly.hpp"

namespace fqt {

/// A place of F_q(t): a monic irreducible polynomial, or infinity (the
/// valuation -deg). Ordered canonically: finite places by polynomial, then
/// infinity last.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws DomainError unless prime is monic irreducible; the message names
  /// the first offending factor when prime is reducible.
  static Place finite(const Poly& prime);
  /// For primes already known to be monic irreducible (factorization output).
  static Place trusted(Poly prime) { return Place(std::move(prime)); }

  bool is_infinity() const { return !prime_.has_value(); }
  /// Precondition: !is_infinity().
  const Poly& prime() const { return *prime_; }
  /// Degree of the residue field over F_q (1 at infinity).
  std::size_t degree() const { return prime_ ? prime_->size() - 1 : 1; }

  friend bool operator==(const Place& a, const Place& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.prime_ == *b.prime_;
  }
  friend std::strong_ordering operator<=>(const Place& a, const Place& b);

 private:
  Place() = default;
  explicit Place(Poly prime) : prime_(std::move(prime)) {}

  std::optional<Poly> prime_;
};

/// "inf" or the polynomial text of the prime.
std::string format(const Place& v);
/// Throws ParseError on bad text and DomainError when the polynomial is not
/// monic irreducible.
Place parse_place(const FieldCtx& field, std::string_view text);

}  // namespace fqt
