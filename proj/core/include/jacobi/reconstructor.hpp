#pragma once

// Recovers the field structure behind a Jacobi function.
//
// Pipeline: Qhat_1 gives the support S (values must be exactly 0 or 1);
// for x in S, alpha -> Qhat_alpha(x) is the character of some i(x); the
// shape of (S, i) decides between the field case (S misses exactly one
// involution c) and the full-support case, which only the trivial group
// admits. In the field case the addition on F = dual(M) + {0} is
//
//   x (+) y = 0                  if x = c y
//   x (+) y = x i(x/y)^{-1}      otherwise,
//
// with 0 the additive identity and 0 * x = x * 0 = 0.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jacobi/finite_field.hpp"
#include "jacobi/jacobi_table.hpp"
#include "jacobi/verifier.hpp"

namespace jacobi {

/// Symbol of the carrier F = dual(M) + {0}: 0 is the field zero, k+1 is the
/// group element with index k.
using Symbol = std::size_t;
inline constexpr Symbol kZeroSymbol = 0;
inline Symbol symbol_of(std::size_t element) { return element + 1; }
inline std::size_t element_of(Symbol s) { return s - 1; }

class AdditionTable {
 public:
  /// `table` is row-major over the m+1 carrier symbols.
  AdditionTable(GroupSpec group, std::vector<Symbol> table);

  const GroupSpec& group() const { return group_; }
  std::size_t carrier_size() const { return n_; }
  Symbol sum(Symbol x, Symbol y) const { return table_[x * n_ + y]; }
  /// Group law extended by the absorbing zero.
  Symbol product(Symbol x, Symbol y) const;
  const std::vector<Symbol>& table() const { return table_; }

  AdditionTable with_entry(Symbol x, Symbol y, Symbol value) const;

  friend bool operator==(const AdditionTable& a, const AdditionTable& b) {
    return a.group_ == b.group_ && a.table_ == b.table_;
  }
  friend bool operator<(const AdditionTable& a, const AdditionTable& b) {
    return a.table_ < b.table_;
  }

 private:
  GroupSpec group_;
  std::size_t n_;
  std::vector<Symbol> table_;
};

struct FieldCase {
  std::size_t c;
};
struct BooleanCase {};
struct Inconsistent {
  std::string stage;
  std::string reason;
  std::vector<std::size_t> at;
};
using CaseResult = std::variant<FieldCase, BooleanCase, Inconsistent>;

template <class T>
using Outcome = std::variant<T, Inconsistent>;

/// Partial map S -> dual(M), indexed by element; nullopt off S.
using IMap = std::vector<std::optional<std::size_t>>;

struct LawCheck {
  bool pass = true;
  std::vector<Symbol> witness;
};

struct FieldChecks {
  LawCheck commutative;
  LawCheck associative;
  LawCheck distributive;
  LawCheck identity;
  LawCheck inverses;
  /// Additive order of 1; 0 if 1 never returns to zero.
  unsigned characteristic = 0;
  /// n with m + 1 = characteristic^n, if that holds.
  std::optional<unsigned> degree;

  bool all_pass() const {
    return commutative.pass && associative.pass && distributive.pass && identity.pass &&
           inverses.pass && degree.has_value();
  }
};

struct ReconstructOptions {
  /// Run the pipeline even if some axiom fails.
  bool force = false;
  /// Cross-check i(x) against Qhat_alpha(x) for every alpha, not just generators.
  bool strict = false;
  /// Generators of M used to recover i; empty means the standard generators.
  std::vector<std::size_t> generators;
  VerifyConfig verify;
};

struct ReconstructionReport {
  GroupSpec group;
  std::optional<VerificationReport> verification;
  std::vector<std::size_t> support;  // S, ascending
  IMap i_map;
  std::vector<std::size_t> image;  // T = i(S), ascending
  CaseResult outcome = Inconsistent{"init", "not run", {}};
  std::optional<Cyclotomic> kappa;
  /// J(1, alpha) = kappa + delta(alpha) for every alpha.
  bool kappa_ok = false;
  std::optional<AdditionTable> addition;
  std::optional<FieldChecks> field_checks;
  bool roundtrip_ok = false;
  bool approximate = false;

  bool is_field() const { return std::holds_alternative<FieldCase>(outcome); }
  bool is_boolean() const { return std::holds_alternative<BooleanCase>(outcome); }
  bool is_inconsistent() const { return std::holds_alternative<Inconsistent>(outcome); }
  /// Everything the pipeline checks came out consistent.
  bool ok() const;
};

/// S = {x : Qhat_1(x) = 1}; every Qhat_1(x) must be exactly 0 or 1.
Outcome<std::vector<std::size_t>> support_S(const JacobiTable& t);

/// i(x) for x in S from Qhat_g(x) over the given generators of M.
Outcome<IMap> recover_i(const JacobiTable& t, const std::vector<std::size_t>& support,
                        const std::vector<std::size_t>& generators, bool strict = false);

CaseResult classify_case(const GroupSpec& g, const std::vector<std::size_t>& support,
                         const IMap& i_map);

AdditionTable build_addition(const GroupSpec& g, std::size_t c, const IMap& i_map);

FieldChecks verify_field(const AdditionTable& at);

/// J(alpha, beta) = 1/m * sum_{x (+) y = 1, x,y != 0} alpha(x) beta(y).
JacobiTable table_from_addition(const AdditionTable& at);

/// Addition of GF(q) on dual(Z/(q-1)) + {0}, identifying a nonzero x with
/// r * dlog(x). r = 1 is the identification compute_jacobi uses; other r
/// coprime to q-1 give the law behind twist_pre(t, r).
AdditionTable field_addition(const FiniteField& f, long r = 1);

ReconstructionReport reconstruct(const JacobiTable& t, const ReconstructOptions& opts = {});

/// Floating-point input: {0,1} and root-of-unity decisions snap to the
/// nearest exact value within opts.verify.tolerance, the combinatorial
/// stages then run exactly, and the final round trip compares within the
/// same tolerance.
ReconstructionReport reconstruct(const ApproxTable& t, const ReconstructOptions& opts = {});

Outcome<std::vector<std::size_t>> support_S(const ApproxTable& t, double tolerance);
Outcome<IMap> recover_i(const ApproxTable& t, const std::vector<std::size_t>& support,
                        const std::vector<std::size_t>& generators, double tolerance);

}  // namespace jacobi
