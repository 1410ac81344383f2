#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "fqt/degree.hpp"
#include "fqt/text.hpp"

namespace fqt::testing {

Fq Gen::element() { return field_.element(below(field_.q())); }

Fq Gen::nonzero() { return field_.element(1 + below(field_.q() - 1)); }

std::size_t Gen::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

Poly Gen::poly(std::size_t max_degree) {
  if (below(max_degree + 2) == 0) return Poly(field_);
  return poly_nonzero(max_degree);
}

Poly Gen::poly_nonzero(std::size_t max_degree) {
  std::size_t d = below(max_degree + 1);
  std::vector<Fq> c(d + 1);
  for (std::size_t i = 0; i < d; ++i) c[i] = element();
  c[d] = nonzero();
  return Poly(field_, std::move(c));
}

Poly Gen::monic(std::size_t max_degree) { return poly_nonzero(max_degree).monic(); }

RatFunc Gen::fraction(std::size_t max_degree) {
  return RatFunc(poly_nonzero(max_degree), poly_nonzero(max_degree));
}

std::vector<Poly> nonzero_polys(const FieldCtx& field, std::size_t bound) {
  std::vector<Poly> out;
  for_each_poly(field, bound, [&](const Poly& f) {
    if (!f.is_zero()) out.push_back(f);
  });
  return out;
}

std::vector<RatFunc> nonzero_fractions(const FieldCtx& field, std::size_t bound) {
  std::vector<Poly> nums = nonzero_polys(field, bound);
  std::vector<RatFunc> out;
  for (const Poly& h : nums) {
    if (!h.is_monic()) continue;
    for (const Poly& g : nums) {
      if (gcd(g, h).is_one()) out.push_back(RatFunc(g, h));
    }
  }
  return out;
}

std::vector<Poly> trial_irreducibles(const FieldCtx& field, std::size_t degree) {
  std::vector<Poly> divisors;
  for (std::size_t d = 1; d <= degree / 2; ++d) {
    for_each_monic(field, d, [&](const Poly& g) { divisors.push_back(g); });
  }
  std::vector<Poly> out;
  for_each_monic(field, degree, [&](const Poly& f) {
    bool irreducible = std::none_of(divisors.begin(), divisors.end(),
                                    [&](const Poly& g) { return (f % g).is_zero(); });
    if (irreducible) out.push_back(f);
  });
  return out;
}

std::set<std::uint32_t> field_squares(const FieldCtx& field) {
  std::set<std::uint32_t> out;
  for (std::uint32_t c = 0; c < field.q(); ++c) out.insert(field.mul(Fq{c}, Fq{c}).code);
  return out;
}

bool residue_square_by_enumeration(const Poly& r, const Poly& f) {
  const FieldCtx& field = f.field();
  Poly target = r % f;
  bool found = false;
  std::size_t deg = f.size() - 1;
  for_each_poly(field, deg - 1, [&](const Poly& y) {
    if (!found && (y * y) % f == target) found = true;
  });
  return found;
}

namespace {

// x at v as (valuation, numerator, denominator) in the local variable s, with
// numerator and denominator prime to the uniformizer. At infinity s = 1/t and
// the polynomials are reversed.
struct LocalForm {
  std::int64_t valuation;
  Poly num;
  Poly den;
};

std::int64_t strip(Poly& f, const Poly& pi) {
  std::int64_t n = 0;
  for (;;) {
    auto [quot, rem] = divmod(f, pi);
    if (!rem.is_zero()) return n;
    f = quot;
    ++n;
  }
}

Poly reversed(const Poly& f) {
  std::vector<Fq> c(f.coeffs().begin(), f.coeffs().end());
  std::reverse(c.begin(), c.end());
  return Poly(f.field(), std::move(c));
}

LocalForm local_form(const RatFunc& x, const Place& v, const Poly& pi) {
  if (v.is_infinity()) {
    std::int64_t dn = x.num().degree().value(), dd = x.den().degree().value();
    return {dd - dn, reversed(x.num()), reversed(x.den())};
  }
  Poly num = x.num(), den = x.den();
  std::int64_t val = strip(num, pi) - strip(den, pi);
  return {val, num, den};
}

struct ConicSearch {
  const FieldCtx& field;
  Poly pi;
  std::size_t precision;
  std::vector<Poly> pi_powers;  // pi^0 .. pi^precision
  std::vector<Poly> digits;     // residue representatives, zero first
  Poly a, b;                    // coefficients mod pi^precision

  // Extends a solution mod pi^level to one mod pi^precision. Writing
  // x' = x + dx pi^level, the form at x' is the form at x plus a term that
  // depends on dx alone, so the third digit is found by lookup.
  bool extend(const Poly& x, const Poly& y, const Poly& z, std::size_t level) const {
    if (level == precision) return true;
    const Poly& w = pi_powers[level];
    const Poly& m = pi_powers[level + 1];
    Poly minus_one = Poly::constant(field, field.neg(field.one()));
    Poly two = Poly::constant(field, field.from_int(2));
    auto contributions = [&](const Poly& coef, const Poly& base) {
      std::vector<Poly> out;
      for (const Poly& d : digits) out.push_back((coef * (two * base * d * w + d * d * w * w)) % m);
      return out;
    };
    Poly value = (a * x * x + b * y * y - z * z) % m;
    std::vector<Poly> cx = contributions(a, x), cy = contributions(b, y);
    std::map<Poly, std::vector<std::size_t>, CanonicalLess> cz;
    {
      std::vector<Poly> c = contributions(minus_one, z);
      for (std::size_t i = 0; i < c.size(); ++i) cz[c[i]].push_back(i);
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      for (std::size_t j = 0; j < digits.size(); ++j) {
        auto it = cz.find(-(value + cx[i] + cy[j]));
        if (it == cz.end()) continue;
        for (std::size_t l : it->second) {
          const Poly& dx = digits[i];
          const Poly& dy = digits[j];
          const Poly& dz = digits[l];
          if (level == 0) {
            // Primitive triple, first nonzero coordinate 1.
            const Poly& lead = !dx.is_zero() ? dx : !dy.is_zero() ? dy : dz;
            if (!lead.is_one()) continue;
          }
          if (extend(x + dx * w, y + dy * w, z + dz * w, level + 1)) return true;
        }
      }
    }
    return false;
  }
};

}  // namespace

int conic_symbol(const RatFunc& a, const RatFunc& b, const Place& v, std::size_t precision) {
  const FieldCtx& field = a.field();
  Poly pi = v.is_infinity() ? Poly::t(field) : v.prime();
  ConicSearch search{field, pi, precision, {}, {}, Poly(field), Poly(field)};
  search.pi_powers.push_back(Poly::constant(field, field.one()));
  for (std::size_t i = 0; i < precision; ++i) search.pi_powers.push_back(search.pi_powers.back() * pi);
  const Poly& modulus = search.pi_powers.back();
  for_each_poly(field, pi.size() - 2, [&](const Poly& d) { search.digits.push_back(d); });

  auto coefficient = [&](const RatFunc& x) {
    LocalForm form = local_form(x, v, pi);
    Poly unit = (form.num * invmod(form.den % modulus, modulus)) % modulus;
    // Scale by an even power of pi: only the parity of the valuation matters.
    if (form.valuation % 2 != 0) unit = (unit * pi) % modulus;
    return unit;
  };
  search.a = coefficient(a);
  search.b = coefficient(b);
  Poly zero(field);
  return search.extend(zero, zero, zero, 0) ? 1 : -1;
}

bool square_at_infinity_by_search(const RatFunc& x, std::size_t precision) {
  const FieldCtx& field = x.field();
  std::int64_t deg = x.degree().value();
  if (deg % 2 != 0) return false;
  // x = t^deg * w(u) with w a unit power series in u = 1/t.
  Poly modulus = Poly::monomial(field, field.one(), precision);
  Poly num = reversed(x.num()), den = reversed(x.den());
  Poly w = (num * invmod(den % modulus, modulus)) % modulus;
  // Find r with r^2 = w mod u^precision, coefficient by coefficient.
  std::function<bool(const Poly&, std::size_t)> lift = [&](const Poly& r, std::size_t n) {
    if (n == precision) return true;
    Poly un1 = Poly::monomial(field, field.one(), n + 1);
    for (std::uint32_t c = 0; c < field.q(); ++c) {
      if (n == 0 && c == 0) continue;
      Poly next = r + Poly::monomial(field, Fq{c}, n);
      if (((next * next - w) % un1).is_zero() && lift(next, n + 1)) return true;
    }
    return false;
  };
  return lift(Poly(field), 0);
}

}  // namespace fqt::testing

namespace fqt {

void PrintTo(const Poly& f, std::ostream* os) { *os << format(f); }
void PrintTo(const RatFunc& x, std::ostream* os) { *os << format(x); }
void PrintTo(const Place& v, std::ostream* os) { *os << format(v); }
void PrintTo(const SymbolValue& s, std::ostream* os) { *os << (s.is_plus() ? "+1" : "-1"); }
void PrintTo(const Fq& c, std::ostream* os) { *os << c.code; }

}  // namespace fqt
