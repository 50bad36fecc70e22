#pragma once

// Decides conditions (A), (B), (C) on a table with exact verdicts, or with
// an absolute tolerance for floating-point tables.
//
//   (A)  J(a, b) = J(b, a)
//   (B)  J*(a, b) J*(ab, c) = J*(a, bc) J*(b, c)
//   (C)  sum_b J(a1 b, a2 b^-1) J(a3 b, a4 b^-1) = J(a1 a4, a2 a3)
//
// Every scan runs in lexicographic index order and reports the first
// failure, so witnesses are deterministic regardless of thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jacobi/jacobi_table.hpp"

namespace jacobi {

enum class CMode { Auto, Exhaustive, Convolution, Sampled };

std::string to_string(CMode mode);
CMode parse_cmode(const std::string& text);

struct VerifyConfig {
  CMode c_mode = CMode::Auto;
  /// Auto picks exhaustive for m <= this.
  std::size_t exhaustive_max_m = 10;
  /// Auto picks convolution for exhaustive_max_m < m <= this, sampled beyond.
  std::size_t convolution_max_m = 40;
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
  /// Absolute tolerance for approximate tables.
  double tolerance = 1e-6;
  unsigned threads = 0;
};

/// A violated instance: the group elements involved (index form) and the
/// two sides that differ, rendered as text.
struct Witness {
  std::vector<std::size_t> at;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  enum class Status { Pass, Fail, Skipped };
  Status status = Status::Pass;
  std::optional<Witness> witness;
  std::string note;

  bool passed() const { return status == Status::Pass; }
  static Verdict fail(Witness w) { return {Status::Fail, std::move(w), {}}; }
};

struct CModeUsed {
  CMode mode = CMode::Exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Sampled mode with samples >= m^4 covers every quadruple.
  bool full_coverage = false;
};

struct VerificationReport {
  Verdict a;
  Verdict b_star;
  Verdict b_reform;
  Verdict c;
  CModeUsed c_mode;
  bool approximate = false;

  bool b_forms_agree() const { return b_star.passed() == b_reform.passed(); }
  bool all_pass() const { return a.passed() && b_star.passed() && b_reform.passed() && c.passed(); }
};

/// The C mode Auto resolves to for a group of order m.
CMode resolve_cmode(const VerifyConfig& cfg, std::size_t m);

Verdict check_A(const JacobiTable& t);
Verdict check_B_star(const JacobiTable& t, unsigned threads = 1);
Verdict check_B_reform(const JacobiTable& t, unsigned threads = 1);

/// Whether (B) holds at one triple, in J* form.
bool b_star_holds(const JacobiTable& t, std::size_t alpha, std::size_t beta, std::size_t gamma);
/// Whether (B) holds at one triple, in the expanded form
///   J(a,b)J(ab,c) - J(a,a^-1) d(ab) + d(a)d(b)
///     = J(a,bc)J(b,c) - J(c^-1,c) d(bc) + d(b)d(c).
bool b_reform_holds(const JacobiTable& t, std::size_t alpha, std::size_t beta,
                    std::size_t gamma);

/// Mode Auto is resolved with `cfg`. Convolution mode throws
/// PreconditionError unless check_A passes.
Verdict check_C(const JacobiTable& t, CMode mode, const VerifyConfig& cfg = {});

VerificationReport verify_all(const JacobiTable& t, const VerifyConfig& cfg = {});

// Floating-point counterparts, comparing with cfg.tolerance.
Verdict check_A(const ApproxTable& t, double tolerance);
Verdict check_B_star(const ApproxTable& t, double tolerance);
Verdict check_B_reform(const ApproxTable& t, double tolerance);
Verdict check_C(const ApproxTable& t, CMode mode, const VerifyConfig& cfg = {});
VerificationReport verify_all(const ApproxTable& t, const VerifyConfig& cfg = {});

}  // namespace jacobi
