#pragma once

// Shared test helpers: seeded generators and naive oracles that recompute
// things straight from their definitions, without the library's fast paths.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacobi/abelian.hpp"
#include "jacobi/cyclotomic.hpp"
#include "jacobi/finite_field.hpp"
#include "jacobi/jacobi_table.hpp"

namespace jacobi::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_);
  }
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

  Rational small_rational() {
    Rational r(between(-6, 6), between(1, 4));
    r.canonicalize();
    return r;
  }

  /// Random element of Q(zeta_m) with a few small nonzero power coefficients.
  Cyclotomic cyclotomic(unsigned m) {
    std::vector<Rational> coeffs(m);
    for (auto& c : coeffs) {
      if (coin(0.4)) c = small_rational();
    }
    return Cyclotomic::from_power_coefficients(m, coeffs);
  }

  GroupFunction function(const GroupSpec& g) {
    GroupFunction f;
    for (std::size_t k = 0; k < g.order(); ++k) f.push_back(cyclotomic(g.conductor()));
    return f;
  }

  JacobiTable table(const GroupSpec& g) {
    std::vector<Cyclotomic> values;
    for (std::size_t k = 0; k < g.order() * g.order(); ++k) values.push_back(cyclotomic(g.conductor()));
    return JacobiTable(g, std::move(values));
  }

 private:
  std::mt19937_64 engine_;
};

inline FiniteField field_of_order(unsigned q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return build_field(pp->p, pp->n, FiniteField::kDefaultMaxOrder);
}

/// All groups of order <= 6 as cyclic-factor lists, one per isomorphism class.
inline std::vector<GroupSpec> small_groups() {
  return {GroupSpec(), GroupSpec({2}), GroupSpec({3}), GroupSpec({4}), GroupSpec({2, 2}),
          GroupSpec({5}), GroupSpec({6})};
}

inline Cyclotomic rational(unsigned m, long num, long den = 1) {
  return Cyclotomic::from_rational(m, Rational(num, den));
}

/// J(a, b) term by term: one root of unity per solution of x + y = 1.
inline JacobiTable naive_jacobi(const FiniteField& f) {
  const unsigned m = f.unit_order();
  const auto g = GroupSpec::cyclic(m);
  std::vector<Cyclotomic> values;
  for (unsigned a = 0; a < m; ++a) {
    for (unsigned b = 0; b < m; ++b) {
      Cyclotomic sum = Cyclotomic::zero(m);
      for (FieldElement x = 1; x < f.order(); ++x) {
        const FieldElement y = f.sub(f.one(), x);
        if (y == f.zero()) continue;
        sum += Cyclotomic::root_power(m, std::int64_t(a) * f.dlog(x) + std::int64_t(b) * f.dlog(y));
      }
      values.push_back(sum.scaled(Rational(1, m)));
    }
  }
  return JacobiTable(g, std::move(values));
}

inline Cyclotomic naive_jstar(const JacobiTable& t, std::size_t a, std::size_t b) {
  return t(a, b) - rational(t.conductor(), delta(a) + delta(b));
}

inline bool naive_A(const JacobiTable& t) {
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (std::size_t b = 0; b < t.order(); ++b) {
      if (!(t(a, b) == t(b, a))) return false;
    }
  }
  return true;
}

inline bool naive_B_triple(const JacobiTable& t, std::size_t a, std::size_t b, std::size_t c) {
  const auto& g = t.group();
  return naive_jstar(t, a, b) * naive_jstar(t, g.add(a, b), c) ==
         naive_jstar(t, a, g.add(b, c)) * naive_jstar(t, b, c);
}

inline bool naive_B(const JacobiTable& t) {
  for (std::size_t a = 0; a < t.order(); ++a) {
    for (std::size_t b = 0; b < t.order(); ++b) {
      for (std::size_t c = 0; c < t.order(); ++c) {
        if (!naive_B_triple(t, a, b, c)) return false;
      }
    }
  }
  return true;
}

inline bool naive_C_quadruple(const JacobiTable& t, std::size_t a1, std::size_t a2, std::size_t a3,
                              std::size_t a4) {
  const auto& g = t.group();
  Cyclotomic sum = Cyclotomic::zero(t.conductor());
  for (std::size_t b = 0; b < t.order(); ++b) {
    sum += t(g.add(a1, b), g.sub(a2, b)) * t(g.add(a3, b), g.sub(a4, b));
  }
  return sum == t(g.add(a1, a4), g.add(a2, a3));
}

inline bool naive_C(const JacobiTable& t) {
  const std::size_t m = t.order();
  for (std::size_t a1 = 0; a1 < m; ++a1)
    for (std::size_t a2 = 0; a2 < m; ++a2)
      for (std::size_t a3 = 0; a3 < m; ++a3)
        for (std::size_t a4 = 0; a4 < m; ++a4)
          if (!naive_C_quadruple(t, a1, a2, a3, a4)) return false;
  return true;
}

}  // namespace jacobi::testing
