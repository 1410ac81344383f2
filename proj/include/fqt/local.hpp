#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqt/place.hpp"
#include "fqt/ratfunc.hpp"

namespace fqt {

/// v(x); std::nullopt stands for the infinite valuation of x = 0.
using Valuation = std::optional<std::int64_t>;

Valuation valuation(const RatFunc& x, const Place& v);
/// Largest m with prime^m | f, for f != 0.
std::int64_t multiplicity(const Poly& f, const Poly& prime);

/// Image of x in the residue field F_v, represented as a polynomial of degree
/// < deg(v) (a constant at infinity). Throws DomainError when v(x) < 0.
Poly residue(const RatFunc& x, const Place& v);
/// Residue of the unit x * pi^(-v(x)), with pi = prime at a finite place and
/// pi = 1/t at infinity. Throws DomainError on zero.
Poly unit_residue(const RatFunc& x, const Place& v);

/// Euler criterion in F_v for a residue (degree < deg v). Zero is a square.
bool residue_is_square(const Poly& r, const Place& v);

/// Square classes of F_q((1/t))^x: 1, (1/t), f, f/t with f a nonsquare
/// constant. Tags multiply as the Klein four-group.
enum class SquareClass { kSquare, kTInv, kFConst, kFTInv };

SquareClass operator*(SquareClass a, SquareClass b);
/// Throws DomainError on zero.
SquareClass square_class_at_infinity(const RatFunc& x);
/// Square test in the completion at v (odd residue characteristic).
bool is_square_at_place(const RatFunc& x, const Place& v);

/// +1 or -1.
class SymbolValue {
 public:
  static constexpr SymbolValue plus() { return SymbolValue(1); }
  static constexpr SymbolValue minus() { return SymbolValue(-1); }
  static constexpr SymbolValue from_bool(bool is_plus) { return SymbolValue(is_plus ? 1 : -1); }

  constexpr int value() const { return value_; }
  constexpr bool is_plus() const { return value_ == 1; }

  friend constexpr SymbolValue operator*(SymbolValue a, SymbolValue b) {
    return SymbolValue(a.value_ * b.value_);
  }
  friend constexpr bool operator==(SymbolValue, SymbolValue) = default;

 private:
  constexpr explicit SymbolValue(int v) : value_(v) {}
  int value_;
};

/// Legendre symbol (g / f) for f monic irreducible. Throws DomainError when
/// f divides g (including g = 0).
SymbolValue legendre(const Poly& g, const Poly& f);

/// Intermediates of the tame symbol at v: m = v(a), n = v(b), and the residue
/// of the unit (-1)^(mn) a^n / b^m.
struct TameSymbol {
  std::int64_t m;
  std::int64_t n;
  Poly unit_residue;
  SymbolValue value;
};

/// Throws DomainError("symbol undefined for zero") on a zero argument.
TameSymbol tame_symbol(const RatFunc& a, const RatFunc& b, const Place& v);
inline SymbolValue hilbert_symbol(const RatFunc& a, const RatFunc& b, const Place& v) {
  return tame_symbol(a, b, v).value;
}

/// Finite places dividing num or den of x, in canonical order.
std::vector<Place> support(const RatFunc& x);

/// Laurent expansion in u = 1/t: x = sum coeffs[i] u^(valuation + i).
struct LaurentSeries {
  std::int64_t valuation = 0;
  std::vector<Fq> coeffs;
};

/// First `precision` coefficients of x at infinity; x must be nonzero.
LaurentSeries expand_at_infinity(const RatFunc& x, std::size_t precision);
/// Coefficient-by-coefficient square root, or nullopt when the valuation is odd
/// or the leading coefficient is a nonsquare.
std::optional<LaurentSeries> series_sqrt(const FieldCtx& field, const LaurentSeries& s);
LaurentSeries series_square(const FieldCtx& field, const LaurentSeries& s);
/// Square test at infinity by lifting a root to the given precision and squaring
/// it back. Independent of square_class_at_infinity.
bool hensel_square_at_infinity(const RatFunc& x, std::size_t precision = 8);

}  // namespace fqt
