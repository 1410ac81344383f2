#include "fqt/field.hpp"

#include <string>

#include "fqt/error.hpp"
#include "fqt/factor.hpp"
#include "fqt/poly.hpp"

namespace fqt {
namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldPtr make_field(std::uint32_t p, std::uint32_t k) {
  if (p == 2) throw DomainError("characteristic 2 unsupported");
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (k < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > FieldCtx::kMaxOrder) throw DomainError("field order exceeds supported size");
  }

  // The prime field's modulus is alpha itself (the least monic of degree 1).
  std::shared_ptr<FieldCtx> prime(new FieldCtx(p, 1, {0, 1}));
  if (k == 1) return prime;

  std::vector<std::uint32_t> modulus;
  for_each_monic(*prime, k, [&](const Poly& m) {
    if (!modulus.empty() || !is_irreducible(m)) return;
    for (Fq c : m.coeffs()) modulus.push_back(c.code);
  });
  return std::shared_ptr<FieldCtx>(new FieldCtx(p, k, std::move(modulus)));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  build_tables();
}

void FieldCtx::build_tables() {
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint32_t code = 0, scale = 1, rest = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      const std::uint32_t digit = rest % p_;
      rest /= p_;
      code += ((p_ - digit) % p_) * scale;
      scale *= p_;
    }
    neg_[a] = code;
  }
  if (q_ <= 256 && k_ > 1) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        std::uint32_t code = 0, scale = 1, ra = a, rb = b;
        for (std::uint32_t i = 0; i < k_; ++i) {
          code += ((ra % p_ + rb % p_) % p_) * scale;
          ra /= p_;
          rb /= p_;
          scale *= p_;
        }
        add_table_[static_cast<std::size_t>(a) * q_ + b] = code;
      }
    }
  }

  // Discrete log tables from a primitive element found in canonical order.
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1, n = 0;
    do {
      exp_[n++] = x;
      x = mul_schoolbook(Fq{x}, Fq{g}).code;
    } while (x != 1 && n < order);
    if (x == 1 && n == order) break;
  }
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i + order] = exp_[i];
    log_[exp_[i]] = i;
  }

  nonsquare_ = Fq{0};
  for (std::uint32_t c = 1; c < q_; ++c) {
    if (!is_square(Fq{c})) {
      nonsquare_ = Fq{c};
      break;
    }
  }
}

Fq FieldCtx::element(std::uint64_t code) const {
  if (code >= q_) {
    throw DomainError("element code " + std::to_string(code) + " out of range for q = " +
                      std::to_string(q_));
  }
  return Fq{static_cast<std::uint32_t>(code)};
}

Fq FieldCtx::from_int(std::int64_t n) const {
  const std::int64_t r = ((n % p_) + p_) % p_;
  return Fq{static_cast<std::uint32_t>(r)};
}

Fq FieldCtx::add(Fq a, Fq b) const {
  if (k_ == 1) {
    const std::uint32_t s = a.code + b.code;
    return Fq{s >= p_ ? s - p_ : s};
  }
  if (!add_table_.empty()) return Fq{add_table_[static_cast<std::size_t>(a.code) * q_ + b.code]};
  std::uint32_t code = 0, scale = 1, ra = a.code, rb = b.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    code += ((ra % p_ + rb % p_) % p_) * scale;
    ra /= p_;
    rb /= p_;
    scale *= p_;
  }
  return Fq{code};
}

Fq FieldCtx::inv(Fq a) const {
  if (a.code == 0) throw DomainError("inverse of zero in F_q");
  const std::uint32_t order = q_ - 1;
  return Fq{exp_[(order - log_[a.code]) % order]};
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t order = q_ - 1;
  return Fq{exp_[(static_cast<std::uint64_t>(log_[a.code]) * (e % order)) % order]};
}

std::optional<Fq> FieldCtx::sqrt(Fq a) const {
  if (a.code == 0) return zero();
  if (!is_square(a)) return std::nullopt;
  return Fq{exp_[log_[a.code] / 2]};
}

std::vector<std::uint32_t> FieldCtx::coordinates(Fq a) const {
  std::vector<std::uint32_t> out(k_);
  std::uint32_t rest = a.code;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out[i] = rest % p_;
    rest /= p_;
  }
  return out;
}

Fq FieldCtx::from_coordinates(std::span<const std::uint32_t> coords) const {
  std::uint32_t code = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t c = i < coords.size() ? coords[i] % p_ : 0;
    code += c * scale;
    scale *= p_;
  }
  return Fq{code};
}

Fq FieldCtx::mul_schoolbook(Fq a, Fq b) const {
  const auto x = coordinates(a);
  const auto y = coordinates(b);
  std::vector<std::uint64_t> prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i) {
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  }
  // Reduce by the monic modulus from the top.
  for (std::size_t d = 2 * k_ - 1; d >= k_; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  std::vector<std::uint32_t> coords(prod.begin(), prod.begin() + k_);
  return from_coordinates(coords);
}

}  // namespace fqt
