#pragma once

#include <cstdint>
#include <ostream>
#include <random>
#include <set>
#include <vector>

#include "fqt/local.hpp"
#include "fqt/ratfunc.hpp"

namespace fqt::testing {

inline constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;

class Gen {
 public:
  explicit Gen(const FieldCtx& field, std::uint64_t seed = kSeed) : field_(field), rng_(seed) {}

  Fq element();
  Fq nonzero();
  std::size_t below(std::size_t n);
  /// Uniform degree in [0, max_degree], then uniform coefficients (leading nonzero).
  Poly poly(std::size_t max_degree);
  Poly nonzero_poly(std::size_t max_degree) { return poly_nonzero(max_degree); }
  Poly monic(std::size_t max_degree);
  RatFunc fraction(std::size_t max_degree);

 private:
  Poly poly_nonzero(std::size_t max_degree);

  const FieldCtx& field_;
  std::mt19937_64 rng_;
};

/// Every nonzero reduced g/h with deg g, deg h <= bound, h monic.
std::vector<RatFunc> nonzero_fractions(const FieldCtx& field, std::size_t bound);
/// Every nonzero polynomial of degree <= bound.
std::vector<Poly> nonzero_polys(const FieldCtx& field, std::size_t bound);

/// Monic irreducibles of the given degree by trial division against every
/// monic polynomial of degree <= degree / 2.
std::vector<Poly> trial_irreducibles(const FieldCtx& field, std::size_t degree);

/// {y^2 : y in F_q}, by enumeration.
std::set<std::uint32_t> field_squares(const FieldCtx& field);

/// Whether r is a square in F_q[t]/(f), by squaring every residue.
bool residue_square_by_enumeration(const Poly& r, const Poly& f);

/// Solvability of z^2 = a x^2 + b y^2 with a primitive triple over the
/// completion at v, searched digit by digit modulo the precision-th power of
/// a uniformizer. At infinity the search runs in u = 1/t. Returns +1 when a
/// solution exists mod pi^precision.
int conic_symbol(const RatFunc& a, const RatFunc& b, const Place& v, std::size_t precision = 6);

/// Naive square test at infinity: lift a root of x in F_q[[1/t]] one
/// coefficient at a time by trying every element of F_q.
bool square_at_infinity_by_search(const RatFunc& x, std::size_t precision = 8);

}  // namespace fqt::testing

namespace fqt {

// gtest printers
void PrintTo(const Poly& f, std::ostream* os);
void PrintTo(const RatFunc& x, std::ostream* os);
void PrintTo(const Place& v, std::ostream* os);
void PrintTo(const SymbolValue& s, std::ostream* os);
void PrintTo(const Fq& c, std::ostream* os);

}  // namespace fqt
