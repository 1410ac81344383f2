#include "fqt/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "fqt/error.hpp"

namespace fqt {
namespace {

// Inverse of Frobenius on coefficients of a polynomial in t^p.
Poly pth_root(const Poly& f) {
  const FieldCtx& field = f.field();
  const std::uint64_t root_exp = field.q() / field.p();  // a^(q/p) = a^(1/p)
  std::vector<Fq> out(f.size() / field.p() + 1, field.zero());
  for (std::size_t i = 0; i < f.size(); i += field.p()) {
    out[i / field.p()] = field.pow(f.coeff(i), root_exp);
  }
  return Poly(field, std::move(out));
}

void squarefree_split(const Poly& f, unsigned scale, std::vector<PrimePower>& out) {
  const FieldCtx& field = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
    w = std::move(y);
    c = c / w;
    ++i;
  }
  c = c.monic();
  if (!c.is_one()) squarefree_split(pth_root(c), scale * field.p(), out);
}

// Blocks of (product of all degree-d irreducible factors, d).
std::vector<std::pair<Poly, std::size_t>> distinct_degree_split(Poly f) {
  const FieldCtx& field = f.field();
  const Poly x = Poly::t(field);
  std::vector<std::pair<Poly, std::size_t>> out;
  Poly h = x % f;
  for (std::size_t d = 1; f.size() >= 2 * d + 1; ++d) {
    h = powmod(h, field.q(), f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      f = f / g;
      h = h % f;
      out.emplace_back(std::move(g), d);
    }
  }
  if (f.size() > 1) {
    const std::size_t d = f.size() - 1;
    out.emplace_back(f.monic(), d);
  }
  return out;
}

// a^((q^d - 1)/2) mod g, written as (prod_{i<d} a^(q^i))^((q-1)/2).
Poly half_power(const Poly& a, std::size_t d, const Poly& g) {
  const FieldCtx& field = g.field();
  Poly conj = a % g;
  Poly norm = conj;
  for (std::size_t i = 1; i < d; ++i) {
    conj = powmod(conj, field.q(), g);
    norm = (norm * conj) % g;
  }
  return powmod(norm, (field.q() - 1) / 2, g);
}

void equal_degree_split(const Poly& g, std::size_t d, std::mt19937_64& rng,
                        std::vector<Poly>& out) {
  if (g.size() - 1 == d) {
    out.push_back(g);
    return;
  }
  const FieldCtx& field = g.field();
  const Poly one = Poly::constant(field, field.one());
  std::uniform_int_distribution<std::uint32_t> coeff(0, field.q() - 1);
  for (;;) {
    std::vector<Fq> coeffs(g.size() - 1);
    for (auto& c : coeffs) c = Fq{coeff(rng)};
    Poly a(field, std::move(coeffs));
    if (a.is_constant()) continue;
    Poly u = gcd(half_power(a, d, g) - one, g);
    if (u.size() > 1 && u.size() < g.size()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(g / u, d, rng, out);
      return;
    }
  }
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t r = 2; r * r <= n; ++r) {
    if (n % r != 0) continue;
    out.push_back(r);
    while (n % r == 0) n /= r;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Poly Factorization::expand(const FieldCtx& field) const {
  Poly acc = Poly::constant(field, unit);
  for (const auto& [prime, mult] : factors) acc *= pow(prime, mult);
  return acc;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result{f.lc(), {}};
  if (f.is_constant()) return result;

  std::vector<PrimePower> squarefree;
  squarefree_split(f.monic(), 1, squarefree);

  std::mt19937_64 rng(0x5eed'f00d);
  std::map<Poly, unsigned, CanonicalLess> collected;
  for (const auto& [part, mult] : squarefree) {
    for (const auto& [block, d] : distinct_degree_split(part)) {
      std::vector<Poly> primes;
      equal_degree_split(block, d, rng, primes);
      for (auto& prime : primes) collected[prime.monic()] += mult;
    }
  }
  for (auto& [prime, mult] : collected) result.factors.push_back({prime, mult});
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.size() < 2) return false;
  const FieldCtx& field = f.field();
  const Poly g = f.monic();
  const std::size_t n = g.size() - 1;
  const Poly x = Poly::t(field);

  // frob[i] = x^(q^i) mod g for i = 0..n
  std::vector<Poly> frob{x % g};
  for (std::size_t i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), field.q(), g));
  if (frob[n] != x % g) return false;
  for (std::size_t r : prime_divisors(n)) {
    if (!gcd(frob[n / r] - x, g).is_one()) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const FieldCtx& field, std::size_t degree) {
  std::vector<Poly> out;
  for_each_monic(field, degree, [&](const Poly& f) {
    if (is_irreducible(f)) out.push_back(f);
  });
  return out;
}

}  // namespace fqt
