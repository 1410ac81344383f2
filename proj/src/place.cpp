#include "fqt/place.hpp"

#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/text.hpp"

namespace fqt {

Place Place::finite(const Poly& prime) {
  if (prime.is_constant()) throw DomainError("place polynomial must have degree >= 1");
  if (!prime.is_monic()) throw DomainError("place polynomial " + format(prime) + " is not monic");
  if (!is_irreducible(prime)) {
    const Factorization fac = factor(prime);
    throw DomainError("place polynomial " + format(prime) + " is reducible: divisible by " +
                      format(fac.factors.front().prime));
  }
  return Place(prime);
}

std::strong_ordering operator<=>(const Place& a, const Place& b) {
  if (a.is_infinity() || b.is_infinity()) {
    return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
  }
  return canonical_compare(*a.prime_, *b.prime_);
}

std::string format(const Place& v) { return v.is_infinity() ? "inf" : format(v.prime()); }

Place parse_place(const FieldCtx& field, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '\t') compact += c;
  }
  if (compact == "inf" || compact == "infinity") return Place::infinity();
  return Place::finite(parse_poly(field, text));
}

}  // namespace fqt
