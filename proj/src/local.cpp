#include "fqt/local.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"

namespace fqt {
namespace {

// Arithmetic in the residue field F_v on polynomial representatives.
class ResidueField {
 public:
  ResidueField(const FieldCtx& field, const Place& v) : field_(field), v_(v) {}

  Poly mul(const Poly& a, const Poly& b) const {
    return v_.is_infinity() ? a * b : (a * b) % v_.prime();
  }
  Poly inv(const Poly& a) const {
    if (a.is_zero()) throw DomainError("inverse of zero residue");
    if (v_.is_infinity()) return Poly::constant(field_, field_.inv(a.coeff(0)));
    return invmod(a, v_.prime());
  }
  Poly pow(const Poly& a, std::int64_t e) const {
    Poly base = e < 0 ? inv(a) : a;
    auto k = static_cast<std::uint64_t>(e < 0 ? -e : e);
    if (v_.is_infinity()) return Poly::constant(field_, field_.pow(base.coeff(0), k));
    return powmod(base, k, v_.prime());
  }

 private:
  const FieldCtx& field_;
  const Place& v_;
};

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exponent) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    out *= base;
  }
  return out;
}

Poly strip(const Poly& f, const Poly& prime, std::int64_t count) {
  Poly out = f;
  for (std::int64_t i = 0; i < count; ++i) out = out / prime;
  return out;
}

}  // namespace

std::int64_t multiplicity(const Poly& f, const Poly& prime) {
  if (f.is_zero()) throw DomainError("multiplicity of a prime in zero");
  std::int64_t m = 0;
  Poly rest = f;
  for (;;) {
    auto [quot, rem] = divmod(rest, prime);
    if (!rem.is_zero()) return m;
    rest = std::move(quot);
    ++m;
  }
}

Valuation valuation(const RatFunc& x, const Place& v) {
  if (x.is_zero()) return std::nullopt;
  if (v.is_infinity()) return -x.degree().value();
  return multiplicity(x.num(), v.prime()) - multiplicity(x.den(), v.prime());
}

Poly unit_residue(const RatFunc& x, const Place& v) {
  const FieldCtx& field = x.field();
  if (x.is_zero()) throw DomainError("unit part of zero");
  if (v.is_infinity()) return Poly::constant(field, x.lc());
  const Poly& f = v.prime();
  const Poly num = strip(x.num(), f, multiplicity(x.num(), f)) % f;
  const Poly den = strip(x.den(), f, multiplicity(x.den(), f)) % f;
  return (num * invmod(den, f)) % f;
}

Poly residue(const RatFunc& x, const Place& v) {
  if (x.is_zero()) return Poly(x.field());
  const std::int64_t m = *valuation(x, v);
  if (m < 0) throw DomainError("not integral at place " + format(v));
  if (m > 0) return Poly(x.field());
  return unit_residue(x, v);
}

bool residue_is_square(const Poly& r, const Place& v) {
  const FieldCtx& field = r.field();
  if (r.is_zero()) return true;
  if (v.is_infinity()) return field.is_square(r.coeff(0));
  const Poly& f = v.prime();
  const std::size_t e = v.degree();
  if (auto size = checked_power(field.q(), e)) {
    return powmod(r, (*size - 1) / 2, f).is_one();
  }
  // r^((Q-1)/2) = N(r)^((q-1)/2) with N(r) = prod_{i<e} r^(q^i) in F_q.
  Poly conj = r % f;
  Poly norm = conj;
  for (std::size_t i = 1; i < e; ++i) {
    conj = powmod(conj, field.q(), f);
    norm = (norm * conj) % f;
  }
  return field.is_square(norm.coeff(0));
}

SquareClass operator*(SquareClass a, SquareClass b) {
  const int bits = static_cast<int>(a) ^ static_cast<int>(b);
  return static_cast<SquareClass>(bits);
}

SquareClass square_class_at_infinity(const RatFunc& x) {
  if (x.is_zero()) throw DomainError("square class of zero");
  const bool odd = x.degree().value() % 2 != 0;
  const bool nonsquare_lc = !x.field().is_square(x.lc());
  if (nonsquare_lc) return odd ? SquareClass::kFTInv : SquareClass::kFConst;
  return odd ? SquareClass::kTInv : SquareClass::kSquare;
}

bool is_square_at_place(const RatFunc& x, const Place& v) {
  if (x.is_zero()) throw DomainError("square test of zero");
  if (*valuation(x, v) % 2 != 0) return false;
  return residue_is_square(unit_residue(x, v), v);
}

SymbolValue legendre(const Poly& g, const Poly& f) {
  const Place v = Place::finite(f);
  const Poly r = g % f;
  if (r.is_zero()) throw DomainError("symbol undefined: " + format(v) + " divides the argument");
  return SymbolValue::from_bool(residue_is_square(r, v));
}

TameSymbol tame_symbol(const RatFunc& a, const RatFunc& b, const Place& v) {
  if (a.is_zero() || b.is_zero()) throw DomainError("symbol undefined for zero");
  const FieldCtx& field = a.field();
  const ResidueField res(field, v);
  const std::int64_t m = *valuation(a, v);
  const std::int64_t n = *valuation(b, v);
  Poly u = res.mul(res.pow(unit_residue(a, v), n), res.pow(unit_residue(b, v), -m));
  if ((m * n) % 2 != 0) u = -u;
  const bool square = residue_is_square(u, v);
  return TameSymbol{m, n, std::move(u), SymbolValue::from_bool(square)};
}

std::vector<Place> support(const RatFunc& x) {
  std::set<Poly, CanonicalLess> primes;
  for (const Poly* f : {&x.num(), &x.den()}) {
    if (f->is_constant()) continue;
    for (const auto& pp : factor(*f).factors) primes.insert(pp.prime);
  }
  std::vector<Place> out;
  for (const auto& p : primes) out.push_back(Place::trusted(p));
  return out;
}

LaurentSeries expand_at_infinity(const RatFunc& x, std::size_t precision) {
  if (x.is_zero()) throw DomainError("expansion of zero");
  const FieldCtx& field = x.field();
  // x = u^(deg den - deg num) * rev(num)(u) / rev(den)(u), rev(den)(0) = 1.
  auto rev = [](const Poly& f) {
    std::vector<Fq> c(f.coeffs().rbegin(), f.coeffs().rend());
    return c;
  };
  const std::vector<Fq> rn = rev(x.num());
  const std::vector<Fq> rd = rev(x.den());
  LaurentSeries s;
  s.valuation = x.den().degree().value() - x.num().degree().value();
  s.coeffs.assign(precision, field.zero());
  for (std::size_t k = 0; k < precision; ++k) {
    Fq acc = k < rn.size() ? rn[k] : field.zero();
    for (std::size_t j = 1; j <= k && j < rd.size(); ++j) {
      acc = field.sub(acc, field.mul(rd[j], s.coeffs[k - j]));
    }
    s.coeffs[k] = acc;
  }
  return s;
}

std::optional<LaurentSeries> series_sqrt(const FieldCtx& field, const LaurentSeries& s) {
  if (s.coeffs.empty() || s.valuation % 2 != 0) return std::nullopt;
  const auto root0 = field.sqrt(s.coeffs[0]);
  if (!root0 || *root0 == field.zero()) return std::nullopt;
  LaurentSeries r;
  r.valuation = s.valuation / 2;
  r.coeffs.assign(s.coeffs.size(), field.zero());
  r.coeffs[0] = *root0;
  const Fq inv_two_root = field.inv(field.add(*root0, *root0));
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
    Fq acc = s.coeffs[k];
    for (std::size_t i = 1; i < k; ++i) acc = field.sub(acc, field.mul(r.coeffs[i], r.coeffs[k - i]));
    r.coeffs[k] = field.mul(acc, inv_two_root);
  }
  return r;
}

LaurentSeries series_square(const FieldCtx& field, const LaurentSeries& s) {
  LaurentSeries out;
  out.valuation = 2 * s.valuation;
  out.coeffs.assign(s.coeffs.size(), field.zero());
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    for (std::size_t j = 0; i + j < s.coeffs.size(); ++j) {
      out.coeffs[i + j] = field.add(out.coeffs[i + j], field.mul(s.coeffs[i], s.coeffs[j]));
    }
  }
  return out;
}

bool hensel_square_at_infinity(const RatFunc& x, std::size_t precision) {
  const FieldCtx& field = x.field();
  const LaurentSeries s = expand_at_infinity(x, precision);
  const auto root = series_sqrt(field, s);
  if (!root) return false;
  const LaurentSeries back = series_square(field, *root);
  return back.valuation == s.valuation && back.coeffs == s.coeffs;
}

}  // namespace fqt
