#pragma once

// Tables J : M x M -> Q(zeta_m), the classical Jacobi sums of a finite
// field, and the operations built on them (J*, Q_alpha, twists).

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "jacobi/abelian.hpp"
#include "jacobi/cyclotomic.hpp"
#include "jacobi/finite_field.hpp"

namespace jacobi {

/// Dense m x m table of exact values with conductor m, row index alpha,
/// column index beta, both in group index order.
class JacobiTable {
 public:
  /// `values` is row-major, m*m entries, each of conductor m.
  JacobiTable(GroupSpec group, std::vector<Cyclotomic> values);

  const GroupSpec& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  unsigned conductor() const { return group_.conductor(); }

  const Cyclotomic& operator()(std::size_t alpha, std::size_t beta) const {
    return values_[alpha * order() + beta];
  }
  const std::vector<Cyclotomic>& values() const { return values_; }

  /// Copy with one entry replaced.
  JacobiTable with_entry(std::size_t alpha, std::size_t beta, Cyclotomic value) const;

  friend bool operator==(const JacobiTable& a, const JacobiTable& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

 private:
  GroupSpec group_;
  std::vector<Cyclotomic> values_;
};

/// Floating-point table, e.g. produced by an external numeric code.
struct ApproxTable {
  GroupSpec group;
  std::vector<std::complex<double>> values;  // row-major m*m

  std::size_t order() const { return group.order(); }
  const std::complex<double>& operator()(std::size_t alpha, std::size_t beta) const {
    return values[alpha * order() + beta];
  }
};

ApproxTable embed(const JacobiTable& t);

/// Classical Jacobi sums of GF(q) over the character group Z/(q-1), with
/// alpha_a(g^t) = zeta^(a t) for the field's generator g:
///
///   J(a, b) = 1/(q-1) * sum_{x + y = 1, x,y != 0} zeta^(a dlog x + b dlog y)
JacobiTable compute_jacobi(const FiniteField& f, unsigned threads = 1);

/// J*(alpha, beta) = J(alpha, beta) - delta(alpha) - delta(beta).
Cyclotomic jstar(const JacobiTable& t, std::size_t alpha, std::size_t beta);

/// Q_alpha(beta) = J(alpha beta^{-1}, beta).
GroupFunction compute_Q(const JacobiTable& t, std::size_t alpha);

/// J'(alpha, beta) = J(alpha^r, beta^r). Requires gcd(r, m) = 1.
JacobiTable twist_pre(const JacobiTable& t, long r);

/// Applies zeta -> zeta^r to every entry. Requires gcd(r, m) = 1.
JacobiTable twist_galois(const JacobiTable& t, long r);

/// J(alpha, beta) = 1/m * sum_{x in S} alpha(i(x)) beta(i(x) x^{-1}),
/// where support[k] = x and image[k] = i(x).
JacobiTable table_from_support(const GroupSpec& g, std::span<const std::size_t> support,
                               std::span<const std::size_t> image);

/// J(alpha, beta) = 1/m * sum_{(x, y) in pairs} alpha(x) beta(y).
JacobiTable table_from_pairs(const GroupSpec& g,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs);

}  // namespace jacobi
