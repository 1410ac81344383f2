#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fqt/degree.hpp"
#include "fqt/field.hpp"

namespace fqt {

/// Univariate polynomial in t over F_q. Coefficients are stored low degree
/// first with no trailing zeros; the empty vector is the zero polynomial.
/// The field context must outlive every polynomial built over it.
class Poly {
 public:
  explicit Poly(const FieldCtx& field) : field_(&field) {}
  Poly(const FieldCtx& field, std::vector<Fq> coeffs);

  static Poly constant(const FieldCtx& field, Fq c);
  static Poly monomial(const FieldCtx& field, Fq c, std::size_t exponent);
  /// The indeterminate t.
  static Poly t(const FieldCtx& field) { return monomial(field, field.one(), 1); }

  const FieldCtx& field() const { return *field_; }
  std::span<const Fq> coeffs() const { return coeffs_; }

  Degree degree() const {
    return coeffs_.empty() ? Degree::neg_infinity()
                           : Degree(static_cast<std::int64_t>(coeffs_.size()) - 1);
  }
  /// Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
  std::size_t size() const { return coeffs_.size(); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_->one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_->one(); }

  /// Leading coefficient; zero for the zero polynomial.
  Fq lc() const { return coeffs_.empty() ? field_->zero() : coeffs_.back(); }
  Fq coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_->zero(); }

  Poly monic() const;
  Poly scaled(Fq c) const;
  Poly derivative() const;
  Fq eval(Fq x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  /// Quotient and remainder; throws DomainError on a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  const FieldCtx* field_;
  std::vector<Fq> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& base, std::uint64_t exponent);
Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus);
/// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
Poly invmod(const Poly& a, const Poly& m);

/// Canonical order: by degree, then coefficient codes from the constant term
/// upward. The zero polynomial sorts first.
std::strong_ordering canonical_compare(const Poly& a, const Poly& b);

struct CanonicalLess {
  bool operator()(const Poly& a, const Poly& b) const { return canonical_compare(a, b) < 0; }
};

/// Visits every monic polynomial of exactly the given degree, in canonical order.
void for_each_monic(const FieldCtx& field, std::size_t degree,
                    const std::function<void(const Poly&)>& visit);
/// First monic polynomial of the given degree (canonical order) satisfying pred.
std::optional<Poly> find_monic(const FieldCtx& field, std::size_t degree,
                               const std::function<bool(const Poly&)>& pred);
/// Visits every polynomial of degree <= max_degree (zero included), in canonical order.
void for_each_poly(const FieldCtx& field, std::size_t max_degree,
                   const std::function<void(const Poly&)>& visit);

}  // namespace fqt
