#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_m).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(m)-1),
// reduced modulo the m-th cyclotomic polynomial, as an integer numerator
// vector over one positive common denominator in lowest terms. The
// representation is canonical: two values are equal iff their numerators
// and denominators are equal.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace jacobi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense integer polynomial, coefficient of x^k at index k.
using IntPoly = std::vector<Integer>;

unsigned euler_phi(unsigned m);

/// Phi_m, computed by exact division of x^m - 1 by Phi_d for every proper
/// divisor d of m.
IntPoly cyclotomic_polynomial(unsigned m);

/// Product of two integer polynomials.
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// Per-conductor tables: Phi_m and the reduced form of every zeta^k.
/// Instances are interned for the lifetime of the process and never mutate
/// after construction, so references may be shared freely across threads.
class CyclotomicRing {
 public:
  static const CyclotomicRing& get(unsigned m);

  unsigned conductor() const { return m_; }
  unsigned degree() const { return phi_; }
  const IntPoly& modulus() const { return modulus_; }

  /// Coefficients of zeta^k reduced modulo Phi_m, for 0 <= k < m.
  std::span<const Integer> root(unsigned k) const { return roots_[k]; }

  CyclotomicRing(const CyclotomicRing&) = delete;
  CyclotomicRing& operator=(const CyclotomicRing&) = delete;

 private:
  explicit CyclotomicRing(unsigned m);

  unsigned m_;
  unsigned phi_;
  IntPoly modulus_;
  std::vector<std::vector<Integer>> roots_;
};

/// Reduces an exponent into [0, m).
inline unsigned mod_exponent(std::int64_t k, unsigned m) {
  const auto r = k % static_cast<std::int64_t>(m);
  return static_cast<unsigned>(r < 0 ? r + m : r);
}

class Cyclotomic {
 public:
  /// The rational zero of Q = Q(zeta_1).
  Cyclotomic();

  static Cyclotomic zero(unsigned m);
  static Cyclotomic one(unsigned m);
  static Cyclotomic from_rational(unsigned m, const Rational& r);
  static Cyclotomic root_power(unsigned m, std::int64_t k);

  /// Builds sum_k coeffs[k] zeta^k for any number of coefficients (indices
  /// are taken mod m) and reduces.
  static Cyclotomic from_power_coefficients(unsigned m,
                                            std::span<const Rational> coeffs);

  unsigned conductor() const { return ring_->conductor(); }
  const CyclotomicRing& ring() const { return *ring_; }

  /// Reduced power-basis coefficients, length phi(m).
  std::vector<Rational> coefficients() const;
  Rational coefficient(unsigned k) const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }

  bool is_zero() const;
  bool is_one() const;
  /// Some exponent e with value == zeta^e, if one exists.
  std::optional<unsigned> root_exponent() const;
  /// The value if it lies in Q.
  std::optional<Rational> as_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  Cyclotomic scaled(const Rational& r) const;
  /// this * zeta^k.
  Cyclotomic times_root(std::int64_t k) const;
  /// Image under the automorphism zeta -> zeta^r; gcd(r, m) must be 1.
  Cyclotomic galois(std::int64_t r) const;

  /// Numeric value at zeta = exp(2 pi i / m). Reporting only.
  std::complex<double> embed() const;

  /// phi(m) strings "p/q" in lowest terms, "0" for zero coefficients.
  std::vector<std::string> serialize() const;
  static Cyclotomic parse(unsigned m, std::span<const std::string> coeffs);

  /// Human-readable "1/2 - 1/3*z + z^2" form.
  std::string to_string() const;

 private:
  friend class CyclotomicAccumulator;
  Cyclotomic(const CyclotomicRing* ring, std::vector<Integer> num, Integer den);
  void check_same_ring(const Cyclotomic& other) const;
  void normalize();

  const CyclotomicRing* ring_;
  std::vector<Integer> num_;
  Integer den_;
};

/// Running sum in Q[x]/(x^m - 1), reduced modulo Phi_m only once at the end.
/// Sums of many rotated terms or products (DFTs, convolutions, character
/// sums) avoid a reduction per term this way.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(unsigned m);

  /// += count * zeta^k
  void add_root(std::int64_t k, long count = 1);
  /// += value * zeta^k
  void add(const Cyclotomic& value, std::int64_t k = 0);
  /// += a * b * zeta^k
  void add_product(const Cyclotomic& a, const Cyclotomic& b, std::int64_t k = 0);
  /// Multiplies the running sum by r.
  void scale(const Rational& r);

  Cyclotomic finish() const;

 private:
  void match_denominator(const Integer& d, Integer& factor);

  const CyclotomicRing* ring_;
  std::vector<Integer> acc_;
  Integer den_;
};

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

}  // namespace jacobi
