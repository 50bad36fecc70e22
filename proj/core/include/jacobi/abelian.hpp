#pragma once

// Finite abelian groups given as products of cyclic factors, their duals,
// and Fourier analysis on them.
//
// A GroupSpec plays the role of both M and its dual: elements of either are
// residue vectors, and the pairing
//
//   alpha(x) = zeta_m ^ (sum_j a_j b_j m / n_j)
//
// fixes the identification once and for all. Elements are indexed
// 0..m-1 in lexicographic order of their coordinate vectors (first factor
// most significant); the index form is what the algorithms use.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jacobi/cyclotomic.hpp"

namespace jacobi {

/// A residue vector (a_1, ..., a_k) with 0 <= a_j < n_j.
struct GroupElement {
  std::vector<unsigned> coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

class GroupSpec {
 public:
  /// Trivial group.
  GroupSpec() : GroupSpec(std::vector<unsigned>{}) {}
  explicit GroupSpec(std::vector<unsigned> factors);

  static GroupSpec cyclic(unsigned n) { return GroupSpec({n}); }

  const std::vector<unsigned>& factors() const { return factors_; }
  std::size_t order() const { return m_; }
  unsigned conductor() const { return static_cast<unsigned>(m_); }

  std::size_t identity() const { return 0; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * m_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }
  /// a added to itself k times.
  std::size_t times(std::size_t a, long k) const;

  /// Exponent e in Z/m with alpha(x) = zeta_m^e.
  unsigned pairing(std::size_t alpha, std::size_t x) const { return pair_[alpha * m_ + x]; }
  unsigned pairing(const GroupElement& alpha, const GroupElement& x) const;

  GroupElement element(std::size_t index) const;
  /// Throws MalformedInput on wrong arity or out-of-range coordinates.
  std::size_t index(const GroupElement& e) const;

  /// Unit vectors of the nontrivial factors; they generate the group.
  std::vector<std::size_t> standard_generators() const;
  /// True if the listed elements generate the whole group.
  bool generates(std::span<const std::size_t> gens) const;
  /// Order of the element (smallest k >= 1 with k*a = 0).
  std::size_t element_order(std::size_t a) const;

  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<unsigned> factors_;
  std::size_t m_;
  std::vector<std::size_t> add_;
  std::vector<std::size_t> neg_;
  std::vector<unsigned> pair_;
};

inline int delta(std::size_t alpha) { return alpha == 0 ? 1 : 0; }
inline int delta(const GroupElement& alpha) {
  for (auto c : alpha.coords) {
    if (c != 0) return 0;
  }
  return 1;
}

/// A function on the group, values indexed by element index.
using GroupFunction = std::vector<Cyclotomic>;
using ApproxFunction = std::vector<std::complex<double>>;

/// fhat(x) = sum_alpha f(alpha) alpha(x).
GroupFunction dft(const GroupSpec& g, const GroupFunction& f);
/// f(alpha) = (1/m) sum_x fhat(x) alpha^{-1}(x).
GroupFunction idft(const GroupSpec& g, const GroupFunction& fhat);
/// (f1 * f2)(alpha) = sum_{beta + gamma = alpha} f1(beta) f2(gamma).
GroupFunction convolve(const GroupSpec& g, const GroupFunction& f1, const GroupFunction& f2);

ApproxFunction dft(const GroupSpec& g, const ApproxFunction& f);

}  // namespace jacobi
