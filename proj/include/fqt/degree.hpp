#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace fqt {

/// Degree of a polynomial or rational function. The zero element has degree
/// negative infinity, which absorbs addition.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(std::int64_t value) : value_(value) {}  // NOLINT(implicit)

  static constexpr Degree neg_infinity() { return Degree(kNegInf, Tag{}); }

  constexpr bool is_neg_infinity() const { return value_ == kNegInf; }
  constexpr std::int64_t value() const { return value_; }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (a.is_neg_infinity() || b.is_neg_infinity()) return neg_infinity();
    return Degree(a.value_ + b.value_);
  }
  friend constexpr Degree operator-(Degree a, Degree b) {
    // Only used for deg(num) - deg(den) with den != 0.
    if (a.is_neg_infinity()) return neg_infinity();
    return Degree(a.value_ - b.value_);
  }

  friend constexpr auto operator<=>(Degree, Degree) = default;

  friend std::ostream& operator<<(std::ostream& os, Degree d) {
    if (d.is_neg_infinity()) return os << "-inf";
    return os << d.value_;
  }

 private:
  struct Tag {};
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t v, Tag) : value_(v) {}

  std::int64_t value_ = 0;
};

}  // namespace fqt
