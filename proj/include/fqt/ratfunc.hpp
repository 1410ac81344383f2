#pragma once

#include <cstdint>

#include "fqt/degree.hpp"
#include "fqt/poly.hpp"

namespace fqt {

/// Element of F_q(t) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1. Canonical form makes structural equality value equality.
class RatFunc {
 public:
  explicit RatFunc(const FieldCtx& field);
  RatFunc(const Poly& poly);  // NOLINT(implicit): polynomials embed in F_q(t)
  /// Reduces num/den; throws DomainError when den = 0.
  RatFunc(const Poly& num, const Poly& den);

  static RatFunc constant(const FieldCtx& field, Fq c) { return RatFunc(Poly::constant(field, c)); }

  const FieldCtx& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// deg(num) - deg(den); negative infinity for zero.
  Degree degree() const { return num_.degree() - den_.degree(); }
  /// lc(num) / lc(den) = lc(num) since den is monic; zero for zero.
  Fq lc() const { return num_.lc(); }

  /// Throws DomainError on zero.
  RatFunc inverse() const;
  RatFunc scaled(Fq c) const;

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Integer power; negative exponents require a nonzero base.
RatFunc pow(const RatFunc& x, std::int64_t exponent);

/// Canonical order on reduced fractions: by denominator, then numerator.
bool canonical_less(const RatFunc& a, const RatFunc& b);

}  // namespace fqt
