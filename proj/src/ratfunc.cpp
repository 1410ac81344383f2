#include "fqt/ratfunc.hpp"

#include "fqt/error.hpp"

namespace fqt {

RatFunc::RatFunc(const FieldCtx& field)
    : num_(field), den_(Poly::constant(field, field.one())) {}

RatFunc::RatFunc(const Poly& poly)
    : num_(poly), den_(Poly::constant(poly.field(), poly.field().one())) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) : num_(num), den_(den) {
  const FieldCtx& field = num.field();
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(field, field.one());
    return;
  }
  Poly g = gcd(num, den);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (!den_.is_monic()) {
    const Fq s = field.inv(den_.lc());
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in F_q(t)");
  const Fq s = field().inv(num_.lc());
  return RatFunc(den_.scaled(s), num_.scaled(s), Reduced{});
}

RatFunc RatFunc::scaled(Fq c) const {
  if (c == field().zero()) return RatFunc(field());
  return RatFunc(num_.scaled(c), den_, Reduced{});
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
  // Cross-cancel first so the product is already reduced.
  const Poly g1 = gcd(a.num_, b.den_);
  const Poly g2 = gcd(b.num_, a.den_);
  Poly num = (a.num_ / g1) * (b.num_ / g2);
  Poly den = (a.den_ / g2) * (b.den_ / g1);
  const Fq s = a.field().inv(den.lc());
  return RatFunc(num.scaled(s), den.scaled(s), RatFunc::Reduced{});
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc pow(const RatFunc& x, std::int64_t exponent) {
  if (exponent < 0) return pow(x.inverse(), -exponent);
  RatFunc result = RatFunc::constant(x.field(), x.field().one());
  RatFunc base = x;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

bool canonical_less(const RatFunc& a, const RatFunc& b) {
  if (auto c = canonical_compare(a.den(), b.den()); c != 0) return c < 0;
  return canonical_compare(a.num(), b.num()) < 0;
}

}  // namespace fqt
