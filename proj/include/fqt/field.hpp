#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fqt {

/// Element of F_q, stored by its canonical code sum(c_i * p^i) where c_i are
/// the polynomial-basis coordinates in alpha. Codes order elements canonically.
struct Fq {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Fq, Fq) = default;
};

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Builds F_q = F_p[alpha]/(m(alpha)) with m the lexicographically least
/// monic irreducible of degree k (coefficients compared low degree first).
/// Throws DomainError for p = 2, composite p, k < 1, or q too large.
FieldPtr make_field(std::uint32_t p, std::uint32_t k = 1);

/// Finite field of odd characteristic. Immutable after construction and safe
/// to share between threads.
class FieldCtx {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }

  /// Coefficients of the defining polynomial over F_p, low degree first.
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }
  /// Root of the modulus (the code p, or 0 when k = 1 and m = alpha).
  Fq alpha() const { return k_ == 1 ? Fq{0} : Fq{p_}; }
  /// Element with the given code; throws DomainError when code >= q.
  Fq element(std::uint64_t code) const;
  /// Image of an integer under Z -> F_p -> F_q.
  Fq from_int(std::int64_t n) const;

  Fq add(Fq a, Fq b) const;
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq neg(Fq a) const { return Fq{neg_[a.code]}; }
  Fq mul(Fq a, Fq b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return Fq{exp_[log_[a.code] + log_[b.code]]};
  }
  /// Throws DomainError on zero.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;

  /// Zero counts as a square.
  bool is_square(Fq a) const { return a.code == 0 || log_[a.code] % 2 == 0; }
  std::optional<Fq> sqrt(Fq a) const;

  /// The fixed nonsquare z: first nonsquare in canonical order.
  Fq nonsquare() const { return nonsquare_; }

  /// Polynomial-basis coordinates of a (length k).
  std::vector<std::uint32_t> coordinates(Fq a) const;
  Fq from_coordinates(std::span<const std::uint32_t> coords) const;

  /// Multiplication straight from the polynomial basis, bypassing the
  /// log tables. Exposed so the tables can be checked against it.
  Fq mul_schoolbook(Fq a, Fq b) const;

 private:
  FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);
  friend FieldPtr make_field(std::uint32_t, std::uint32_t);

  void build_tables();

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;  // q*q entries when q is small
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;  // 2(q-1) entries
  std::vector<std::uint32_t> log_;
  Fq nonsquare_;
};

}  // namespace fqt
