#pragma once

// Explicit GF(p^n) with a multiplicative generator and discrete-log tables.
//
// An element is encoded as the integer sum_k c_k p^k of its coefficient
// vector (c_0 = constant term) in the basis 1, t, ..., t^(n-1). This integer
// order is also the tie-break order for choosing the modulus and the
// generator, so construction is reproducible.

#include <cstdint>
#include <optional>
#include <vector>

namespace jacobi {

using FieldElement = std::uint32_t;

bool is_prime(unsigned n);

/// Distinct prime divisors in increasing order.
std::vector<unsigned> prime_factors(unsigned n);

/// (p, n) with q = p^n, if q is a prime power > 1.
struct PrimePower {
  unsigned p;
  unsigned n;
};
std::optional<PrimePower> as_prime_power(unsigned q);

class FiniteField {
 public:
  static constexpr unsigned kDefaultMaxOrder = 1u << 16;

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  unsigned order() const { return q_; }
  /// q - 1, the order of the multiplicative group.
  unsigned unit_order() const { return q_ - 1; }

  /// Monic modulus, n+1 coefficients from the constant term up.
  const std::vector<unsigned>& modulus() const { return modulus_; }
  FieldElement generator() const { return generator_; }

  FieldElement zero() const { return 0; }
  FieldElement one() const { return 1; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  /// Polynomial product reduced by the modulus.
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DomainError on zero.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// Exponent t in Z/(q-1) with generator^t == a. Throws DomainError on zero.
  unsigned dlog(FieldElement a) const;
  /// generator^(t mod (q-1)).
  FieldElement exp(std::int64_t t) const;

  std::vector<unsigned> digits(FieldElement a) const;
  FieldElement from_digits(const std::vector<unsigned>& digits) const;

  friend FiniteField build_field(unsigned p, unsigned n, unsigned max_order);

 private:
  FiniteField() = default;
  void check(FieldElement a) const;

  unsigned p_ = 0;
  unsigned n_ = 0;
  unsigned q_ = 0;
  std::vector<unsigned> modulus_;
  FieldElement generator_ = 0;
  std::vector<unsigned> log_;
  std::vector<FieldElement> exp_;
};

/// GF(p^n) with the smallest monic irreducible modulus and the smallest
/// primitive element. Throws DomainError if p is not prime, n == 0, or
/// p^n > max_order.
FiniteField build_field(unsigned p, unsigned n,
                        unsigned max_order = FiniteField::kDefaultMaxOrder);

}  // namespace jacobi
