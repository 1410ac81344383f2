#include "fqt/poly.hpp"

#include <algorithm>

#include "fqt/error.hpp"

namespace fqt {

Poly::Poly(const FieldCtx& field, std::vector<Fq> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  trim();
}

Poly Poly::constant(const FieldCtx& field, Fq c) { return Poly(field, {c}); }

Poly Poly::monomial(const FieldCtx& field, Fq c, std::size_t exponent) {
  if (c == field.zero()) return Poly(field);
  std::vector<Fq> coeffs(exponent + 1, field.zero());
  coeffs[exponent] = c;
  return Poly(field, std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().code == 0) coeffs_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(lc()));
}

Poly Poly::scaled(Fq c) const {
  if (c == field_->zero()) return Poly(*field_);
  std::vector<Fq> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
  return Poly(*field_, std::move(out));
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(*field_);
  std::vector<Fq> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i)));
  }
  return Poly(*field_, std::move(out));
}

Fq Poly::eval(Fq x) const {
  Fq acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

Poly Poly::operator-() const {
  std::vector<Fq> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_->neg(coeffs_[i]);
  return Poly(*field_, std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_->add(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_->zero());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = field_->sub(coeffs_[i], other.coeffs_[i]);
  }
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldCtx& f = *a.field_;
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Fq> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].code == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Poly(f, std::move(out));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const FieldCtx& f = *a.field_;
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.coeffs_.size() < b.coeffs_.size()) return {Poly(f), a};
  std::vector<Fq> rem = a.coeffs_;
  std::vector<Fq> quot(a.coeffs_.size() - b.coeffs_.size() + 1, f.zero());
  const Fq lead_inv = f.inv(b.lc());
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    const Fq c = f.mul(rem[i], lead_inv);
    if (c.code == 0) continue;
    quot[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeffs_[j]));
    }
  }
  rem.resize(db);
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& base, std::uint64_t exponent) {
  Poly result = Poly::constant(base.field(), base.field().one());
  Poly b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Poly powmod(const Poly& base, std::uint64_t exponent, const Poly& modulus) {
  Poly result = Poly::constant(base.field(), base.field().one()) % modulus;
  Poly b = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * b) % modulus;
    exponent >>= 1;
    if (exponent > 0) b = (b * b) % modulus;
  }
  return result;
}

Poly invmod(const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  const FieldCtx& f = m.field();
  Poly r0 = m, r1 = a % m;
  Poly s0(f), s1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [quot, rem] = divmod(r0, r1);
    Poly s2 = s0 - quot * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != Degree(0)) throw DomainError("element is not invertible modulo the polynomial");
  return (s0.scaled(f.inv(r0.lc()))) % m;
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = a.coeff(i) <=> b.coeff(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

// Odometer over `digits` with index 0 most significant; returns false on wrap.
bool advance(std::vector<std::uint32_t>& digits, std::uint32_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

void for_each_monic(const FieldCtx& field, std::size_t degree,
                    const std::function<void(const Poly&)>& visit) {
  std::vector<std::uint32_t> low(degree, 0);  // c_0 .. c_{degree-1}
  do {
    std::vector<Fq> coeffs(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) coeffs[i] = Fq{low[i]};
    coeffs[degree] = field.one();
    visit(Poly(field, std::move(coeffs)));
  } while (advance(low, field.q()));
}

std::optional<Poly> find_monic(const FieldCtx& field, std::size_t degree,
                               const std::function<bool(const Poly&)>& pred) {
  std::vector<std::uint32_t> low(degree, 0);
  do {
    std::vector<Fq> coeffs(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) coeffs[i] = Fq{low[i]};
    coeffs[degree] = field.one();
    Poly f(field, std::move(coeffs));
    if (pred(f)) return f;
  } while (advance(low, field.q()));
  return std::nullopt;
}

void for_each_poly(const FieldCtx& field, std::size_t max_degree,
                   const std::function<void(const Poly&)>& visit) {
  visit(Poly(field));
  for (std::size_t d = 0; d <= max_degree; ++d) {
    std::vector<std::uint32_t> digits(d + 1, 0);  // c_0 .. c_d
    do {
      if (digits[d] == 0) continue;
      std::vector<Fq> coeffs(d + 1);
      for (std::size_t i = 0; i <= d; ++i) coeffs[i] = Fq{digits[i]};
      visit(Poly(field, std::move(coeffs)));
    } while (advance(digits, field.q()));
  }
}

}  // namespace fqt
