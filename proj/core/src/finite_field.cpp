#include "jacobi/finite_field.hpp"

#include <string>

#include "jacobi/error.hpp"

namespace jacobi {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<PrimePower> as_prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  const auto ps = prime_factors(q);
  if (ps.size() != 1) return std::nullopt;
  unsigned n = 0;
  for (unsigned r = q; r > 1; r /= ps[0]) ++n;
  return PrimePower{ps[0], n};
}

namespace {

using Poly = std::vector<unsigned>;  // coefficients mod p, constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p prime, a != 0 mod p
  unsigned result = 1;
  unsigned base = a % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = static_cast<unsigned>(std::uint64_t(result) * base % p);
    base = static_cast<unsigned>(std::uint64_t(base) * base % p);
  }
  return result;
}

// Remainder of a modulo b over Z/p; b nonzero.
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() > db) {
    const unsigned coef = static_cast<unsigned>(std::uint64_t(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = (a[shift + j] + p - static_cast<unsigned>(std::uint64_t(coef) * b[j] % p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly decode(unsigned value, unsigned p, std::size_t len) {
  Poly out(len, 0);
  for (std::size_t k = 0; k < len; ++k) {
    out[k] = value % p;
    value /= p;
  }
  return out;
}

bool is_irreducible(const Poly& f, unsigned p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= n; ++d) {
    unsigned count = 1;
    for (std::size_t k = 0; k < d; ++k) count *= p;
    for (unsigned v = 0; v < count; ++v) {
      Poly g = decode(v, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FiniteField build_field(unsigned p, unsigned n, unsigned max_order) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned k = 0; k < n; ++k) {
    q *= p;
    if (q > max_order) {
      throw DomainError("field order " + std::to_string(p) + "^" + std::to_string(n) +
                        " exceeds bound " + std::to_string(max_order));
    }
  }

  FiniteField f;
  f.p_ = p;
  f.n_ = n;
  f.q_ = static_cast<unsigned>(q);

  for (unsigned v = 0; v < f.q_; ++v) {
    Poly cand = decode(v, p, n);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      f.modulus_ = std::move(cand);
      break;
    }
  }

  const unsigned units = f.q_ - 1;
  const auto primes = prime_factors(units);
  for (FieldElement a = 1; a < f.q_; ++a) {
    bool primitive = true;
    for (auto l : primes) {
      if (f.pow(a, units / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      f.generator_ = a;
      break;
    }
  }

  f.log_.assign(f.q_, 0);
  f.exp_.assign(units, 0);
  FieldElement x = 1;
  for (unsigned t = 0; t < units; ++t) {
    f.exp_[t] = x;
    f.log_[x] = t;
    x = f.mul(x, f.generator_);
  }
  if (x != 1) throw Error("build_field: generator order check failed");
  return f;
}

void FiniteField::check(FieldElement a) const {
  if (a >= q_) throw MalformedInput("field element " + std::to_string(a) + " out of range");
}

std::vector<unsigned> FiniteField::digits(FieldElement a) const {
  check(a);
  return decode(a, p_, n_);
}

FieldElement FiniteField::from_digits(const std::vector<unsigned>& digits) const {
  if (digits.size() != n_) throw MalformedInput("field element needs " + std::to_string(n_) + " digits");
  FieldElement v = 0;
  for (std::size_t k = n_; k-- > 0;) {
    if (digits[k] >= p_) throw MalformedInput("field digit out of range");
    v = v * p_ + digits[k];
  }
  return v;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  FieldElement out = 0;
  FieldElement scale = 1;
  for (unsigned k = 0; k < n_; ++k) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FieldElement FiniteField::neg(FieldElement a) const {
  check(a);
  FieldElement out = 0;
  FieldElement scale = 1;
  for (unsigned k = 0; k < n_; ++k) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FieldElement FiniteField::mul(FieldElement a, FieldElement b) const {
  const Poly x = digits(a);
  const Poly y = digits(b);
  Poly prod(2 * n_ - 1, 0);
  for (unsigned i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      prod[i + j] = static_cast<unsigned>((prod[i + j] + std::uint64_t(x[i]) * y[j]) % p_);
    }
  }
  Poly r = n_ == 1 ? prod : poly_mod(prod, modulus_, p_);
  r.resize(n_, 0);
  return from_digits(r);
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t k) const {
  FieldElement result = 1;
  FieldElement base = a;
  for (; k > 0; k >>= 1) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FieldElement FiniteField::inv(FieldElement a) const {
  check(a);
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(q_) + ")");
  return exp(-static_cast<std::int64_t>(log_[a]));
}

unsigned FiniteField::dlog(FieldElement a) const {
  check(a);
  if (a == 0) throw DomainError("discrete log of zero");
  return log_[a];
}

FieldElement FiniteField::exp(std::int64_t t) const {
  const auto units = static_cast<std::int64_t>(q_ - 1);
  std::int64_t r = t % units;
  if (r < 0) r += units;
  return exp_[static_cast<std::size_t>(r)];
}

}  // namespace jacobi
