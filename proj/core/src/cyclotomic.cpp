#include "jacobi/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

unsigned euler_phi(unsigned m) {
  if (m == 0) throw DomainError("euler_phi: m must be positive");
  unsigned result = m;
  unsigned n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

namespace {

// Quotient of num by a monic divisor; throws if the division is not exact.
IntPoly divide_exact_monic(IntPoly num, const IntPoly& divisor) {
  const std::size_t dn = divisor.size() - 1;
  if (num.size() <= dn) throw Error("divide_exact_monic: degree too small");
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const Integer lead = num[k];
    quot[k - dn] = lead;
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) {
      mpz_submul(num[k - dn + j].get_mpz_t(), lead.get_mpz_t(), divisor[j].get_mpz_t());
    }
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw Error("divide_exact_monic: nonzero remainder");
  }
  return quot;
}

}  // namespace

IntPoly cyclotomic_polynomial(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic_polynomial: m must be positive");
  IntPoly poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_exact_monic(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

CyclotomicRing::CyclotomicRing(unsigned m)
    : m_(m), phi_(euler_phi(m)), modulus_(cyclotomic_polynomial(m)) {
  roots_.reserve(m_);
  for (unsigned k = 0; k < m_; ++k) {
    std::vector<Integer> r(phi_, 0);
    if (k < phi_) {
      r[k] = 1;
    } else {
      // zeta^k = zeta * zeta^(k-1), folding the x^phi term back with Phi_m.
      const auto& prev = roots_[k - 1];
      const Integer top = prev[phi_ - 1];
      for (unsigned j = phi_; j-- > 0;) {
        r[j] = (j > 0 ? prev[j - 1] : Integer(0)) - top * modulus_[j];
      }
    }
    roots_.push_back(std::move(r));
  }
}

const CyclotomicRing& CyclotomicRing::get(unsigned m) {
  if (m == 0) throw DomainError("cyclotomic conductor must be positive");
  thread_local const CyclotomicRing* last = nullptr;
  if (last != nullptr && last->m_ == m) return *last;

  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicRing>> rings;
  std::lock_guard lock(mutex);
  auto& slot = rings[m];
  if (!slot) slot.reset(new CyclotomicRing(m));
  last = slot.get();
  return *slot;
}

// --- Cyclotomic -----------------------------------------------------------

Cyclotomic::Cyclotomic() : Cyclotomic(zero(1)) {}

Cyclotomic::Cyclotomic(const CyclotomicRing* ring, std::vector<Integer> num, Integer den)
    : ring_(ring), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

Cyclotomic Cyclotomic::zero(unsigned m) {
  const auto& ring = CyclotomicRing::get(m);
  return Cyclotomic(&ring, std::vector<Integer>(ring.degree(), 0), 1);
}

Cyclotomic Cyclotomic::one(unsigned m) { return root_power(m, 0); }

Cyclotomic Cyclotomic::from_rational(unsigned m, const Rational& r) {
  const auto& ring = CyclotomicRing::get(m);
  std::vector<Integer> num(ring.degree(), 0);
  num[0] = r.get_num();
  return Cyclotomic(&ring, std::move(num), r.get_den());
}

Cyclotomic Cyclotomic::root_power(unsigned m, std::int64_t k) {
  const auto& ring = CyclotomicRing::get(m);
  const auto r = ring.root(mod_exponent(k, m));
  return Cyclotomic(&ring, std::vector<Integer>(r.begin(), r.end()), 1);
}

Cyclotomic Cyclotomic::from_power_coefficients(unsigned m, std::span<const Rational> coeffs) {
  CyclotomicAccumulator acc(m);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    acc.add(from_rational(m, coeffs[k]), static_cast<std::int64_t>(k));
  }
  return acc.finish();
}

void Cyclotomic::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  bool all_zero = true;
  for (const auto& c : num_) {
    if (c == 0) continue;
    all_zero = false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (all_zero) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

void Cyclotomic::check_same_ring(const Cyclotomic& other) const {
  if (ring_ != other.ring_) {
    throw DomainError("cyclotomic conductor mismatch: " + std::to_string(conductor()) +
                      " vs " + std::to_string(other.conductor()));
  }
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> out;
  out.reserve(num_.size());
  for (unsigned k = 0; k < num_.size(); ++k) out.push_back(coefficient(k));
  return out;
}

Rational Cyclotomic::coefficient(unsigned k) const {
  Rational r(num_.at(k), den_);
  r.canonicalize();
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const {
  if (den_ != 1 || num_[0] != 1) return false;
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (num_[k] != 0) return false;
  }
  return true;
}

std::optional<unsigned> Cyclotomic::root_exponent() const {
  if (den_ != 1) return std::nullopt;
  for (unsigned e = 0; e < conductor(); ++e) {
    const auto r = ring_->root(e);
    if (std::equal(r.begin(), r.end(), num_.begin())) return e;
  }
  return std::nullopt;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (num_[k] != 0) return std::nullopt;
  }
  return coefficient(0);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_ring(rhs);
  if (den_ == rhs.den_) {
    for (std::size_t k = 0; k < num_.size(); ++k) num_[k] += rhs.num_[k];
  } else {
    Integer lcm;
    mpz_lcm(lcm.get_mpz_t(), den_.get_mpz_t(), rhs.den_.get_mpz_t());
    const Integer fa = lcm / den_;
    const Integer fb = lcm / rhs.den_;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      num_[k] *= fa;
      mpz_addmul(num_[k].get_mpz_t(), rhs.num_[k].get_mpz_t(), fb.get_mpz_t());
    }
    den_ = lcm;
  }
  normalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_ring(b);
  CyclotomicAccumulator acc(a.conductor());
  acc.add_product(a, b);
  return acc.finish();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_ring(b);
  return a.den_ == b.den_ && a.num_ == b.num_;
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  std::vector<Integer> num = num_;
  for (auto& c : num) c *= r.get_num();
  return Cyclotomic(ring_, std::move(num), den_ * r.get_den());
}

Cyclotomic Cyclotomic::times_root(std::int64_t k) const {
  CyclotomicAccumulator acc(conductor());
  acc.add(*this, k);
  return acc.finish();
}

Cyclotomic Cyclotomic::galois(std::int64_t r) const {
  const unsigned m = conductor();
  if (std::gcd(static_cast<std::int64_t>(m), r < 0 ? -r : r) != 1) {
    throw DomainError("galois: exponent " + std::to_string(r) + " not coprime to conductor " +
                      std::to_string(m));
  }
  std::vector<Integer> expanded(m, 0);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    expanded[mod_exponent(r * static_cast<std::int64_t>(k), m)] += num_[k];
  }
  std::vector<Integer> num(ring_->degree(), 0);
  for (unsigned e = 0; e < m; ++e) {
    if (expanded[e] == 0) continue;
    const auto root = ring_->root(e);
    for (std::size_t j = 0; j < num.size(); ++j) {
      if (root[j] != 0) mpz_addmul(num[j].get_mpz_t(), expanded[e].get_mpz_t(), root[j].get_mpz_t());
    }
  }
  return Cyclotomic(ring_, std::move(num), den_);
}

std::complex<double> Cyclotomic::embed() const {
  const double m = conductor();
  std::complex<double> z = 0.0;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    const double c = coefficient(static_cast<unsigned>(k)).get_d();
    z += c * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / m);
  }
  return z;
}

std::vector<std::string> Cyclotomic::serialize() const {
  std::vector<std::string> out;
  out.reserve(num_.size());
  for (unsigned k = 0; k < num_.size(); ++k) out.push_back(format_rational(coefficient(k)));
  return out;
}

Cyclotomic Cyclotomic::parse(unsigned m, std::span<const std::string> coeffs) {
  const auto& ring = CyclotomicRing::get(m);
  if (coeffs.size() != ring.degree()) {
    throw MalformedInput("cyclotomic value for conductor " + std::to_string(m) + " needs " +
                         std::to_string(ring.degree()) + " coefficients, got " +
                         std::to_string(coeffs.size()));
  }
  CyclotomicAccumulator acc(m);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Rational r = parse_rational(coeffs[k]);
    if (r != 0) acc.add(from_rational(m, r), static_cast<std::int64_t>(k));
  }
  return acc.finish();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned k = 0; k < num_.size(); ++k) {
    const Rational c = coefficient(k);
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

// --- CyclotomicAccumulator ------------------------------------------------

CyclotomicAccumulator::CyclotomicAccumulator(unsigned m)
    : ring_(&CyclotomicRing::get(m)), acc_(m, 0), den_(1) {}

void CyclotomicAccumulator::match_denominator(const Integer& d, Integer& factor) {
  if (d == den_) {
    factor = 1;
    return;
  }
  Integer lcm;
  mpz_lcm(lcm.get_mpz_t(), den_.get_mpz_t(), d.get_mpz_t());
  if (lcm != den_) {
    const Integer s = lcm / den_;
    for (auto& c : acc_) {
      if (c != 0) c *= s;
    }
    den_ = lcm;
  }
  factor = den_ / d;
}

void CyclotomicAccumulator::add_root(std::int64_t k, long count) {
  Integer term = den_ * count;
  acc_[mod_exponent(k, ring_->conductor())] += term;
}

void CyclotomicAccumulator::add(const Cyclotomic& value, std::int64_t k) {
  if (value.ring_ != ring_) throw DomainError("accumulator conductor mismatch");
  Integer factor;
  match_denominator(value.den_, factor);
  const unsigned m = ring_->conductor();
  const unsigned shift = mod_exponent(k, m);
  for (unsigned j = 0; j < value.num_.size(); ++j) {
    if (value.num_[j] == 0) continue;
    unsigned e = j + shift;
    if (e >= m) e -= m;
    mpz_addmul(acc_[e].get_mpz_t(), value.num_[j].get_mpz_t(), factor.get_mpz_t());
  }
}

void CyclotomicAccumulator::add_product(const Cyclotomic& a, const Cyclotomic& b,
                                        std::int64_t k) {
  if (a.ring_ != ring_ || b.ring_ != ring_) throw DomainError("accumulator conductor mismatch");
  Integer factor;
  match_denominator(a.den_ * b.den_, factor);
  const unsigned m = ring_->conductor();
  const unsigned shift = mod_exponent(k, m);
  const std::size_t n = a.num_.size();
  Integer scaled;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.num_[i] == 0) continue;
    const Integer* ai = &a.num_[i];
    if (factor != 1) {
      scaled = a.num_[i] * factor;
      ai = &scaled;
    }
    unsigned e = static_cast<unsigned>(i) + shift;
    if (e >= m) e -= m;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.num_[j] != 0) mpz_addmul(acc_[e].get_mpz_t(), ai->get_mpz_t(), b.num_[j].get_mpz_t());
      if (++e == m) e = 0;
    }
  }
}

void CyclotomicAccumulator::scale(const Rational& r) {
  for (auto& c : acc_) c *= r.get_num();
  den_ *= r.get_den();
}

Cyclotomic CyclotomicAccumulator::finish() const {
  const unsigned phi = ring_->degree();
  std::vector<Integer> num(acc_.begin(), acc_.begin() + phi);
  for (unsigned e = phi; e < ring_->conductor(); ++e) {
    if (acc_[e] == 0) continue;
    const auto root = ring_->root(e);
    for (unsigned j = 0; j < phi; ++j) {
      if (root[j] != 0) mpz_addmul(num[j].get_mpz_t(), acc_[e].get_mpz_t(), root[j].get_mpz_t());
    }
  }
  return Cyclotomic(ring_, std::move(num), den_);
}

// --- rationals ------------------------------------------------------------

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw MalformedInput("empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && i == 0);
    if (!ok) throw MalformedInput("malformed rational '" + s + "'");
  }
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0 || r.get_den() == 0) {
    throw MalformedInput("malformed rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r == 0) return "0";
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace jacobi
