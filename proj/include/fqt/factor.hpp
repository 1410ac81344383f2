#pragma once

#include <cstddef>
#include <vector>

#include "fqt/poly.hpp"

namespace fqt {

struct PrimePower {
  Poly prime;  // monic irreducible
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// f = unit * prod(prime^multiplicity), primes distinct and sorted canonically.
struct Factorization {
  Fq unit;
  std::vector<PrimePower> factors;

  Poly expand(const FieldCtx& field) const;
};

/// Factors a nonzero polynomial into monic irreducibles (square-free split,
/// distinct-degree split, then Cantor-Zassenhaus with a fixed seed). Throws
/// DomainError on zero.
Factorization factor(const Poly& f);

/// Rabin's test. Nonzero constants and zero are not irreducible.
bool is_irreducible(const Poly& f);

/// All monic irreducibles of exactly the given degree, in canonical order.
std::vector<Poly> monic_irreducibles(const FieldCtx& field, std::size_t degree);

}  // namespace fqt
