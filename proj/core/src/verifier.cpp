#include "jacobi/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "jacobi/error.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi {

std::string to_string(CMode mode) {
  switch (mode) {
    case CMode::Auto: return "auto";
    case CMode::Exhaustive: return "exhaustive";
    case CMode::Convolution: return "convolution";
    case CMode::Sampled: return "sampled";
  }
  return "?";
}

CMode parse_cmode(const std::string& text) {
  if (text == "auto") return CMode::Auto;
  if (text == "exhaustive") return CMode::Exhaustive;
  if (text == "convolution") return CMode::Convolution;
  if (text == "sampled") return CMode::Sampled;
  throw MalformedInput("unknown C mode '" + text + "'");
}

CMode resolve_cmode(const VerifyConfig& cfg, std::size_t m) {
  if (cfg.c_mode != CMode::Auto) return cfg.c_mode;
  if (m <= cfg.exhaustive_max_m) return CMode::Exhaustive;
  if (m <= cfg.convolution_max_m) return CMode::Convolution;
  return CMode::Sampled;
}

namespace {

// Scalar policies: the checks below are written once against these.

struct ExactOps {
  using Table = JacobiTable;
  using Value = Cyclotomic;

  const Table& t;
  unsigned m = t.conductor();

  const GroupSpec& group() const { return t.group(); }
  const Value& get(std::size_t a, std::size_t b) const { return t(a, b); }
  Value constant(long k) const { return Cyclotomic::from_rational(m, k); }
  bool eq(const Value& x, const Value& y) const { return x == y; }
  static std::string str(const Value& v) { return v.to_string(); }

  class Sum {
   public:
    explicit Sum(unsigned m) : acc_(m) {}
    void add_product(const Value& x, const Value& y) { acc_.add_product(x, y); }
    void add(const Value& x) { acc_.add(x); }
    void sub(const Value& x) { acc_.add(-x); }
    void add_int(long k) { acc_.add_root(0, k); }
    Value finish() const { return acc_.finish(); }

   private:
    CyclotomicAccumulator acc_;
  };
  Sum sum() const { return Sum(m); }
};

struct ApproxOps {
  using Table = ApproxTable;
  using Value = std::complex<double>;

  const Table& t;
  double tol;

  const GroupSpec& group() const { return t.group; }
  const Value& get(std::size_t a, std::size_t b) const { return t(a, b); }
  Value constant(long k) const { return static_cast<double>(k); }
  bool eq(const Value& x, const Value& y) const { return std::abs(x - y) <= tol; }
  static std::string str(const Value& v) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << v.real() << "," << v.imag() << ")";
    return os.str();
  }

  class Sum {
   public:
    void add_product(const Value& x, const Value& y) { v_ += x * y; }
    void add(const Value& x) { v_ += x; }
    void sub(const Value& x) { v_ -= x; }
    void add_int(long k) { v_ += static_cast<double>(k); }
    Value finish() const { return v_; }

   private:
    Value v_ = 0.0;
  };
  Sum sum() const { return Sum(); }
};

// Runs scan(outer) for outer in [0, n) and returns the failure with the
// smallest outer index. Workers skip outer indices above the best failure
// found so far.
template <class Scan>
std::optional<Witness> first_failure(std::size_t n, unsigned threads, Scan&& scan) {
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  std::vector<std::optional<Witness>> found(n);
  parallel_for(n, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t outer = begin; outer < end; ++outer) {
      if (outer > best.load()) return;
      if (auto w = scan(outer)) {
        found[outer] = std::move(w);
        std::size_t cur = best.load();
        while (outer < cur && !best.compare_exchange_weak(cur, outer)) {
        }
        return;
      }
    }
  });
  const std::size_t b = best.load();
  if (b == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return found[b];
}

Verdict from(std::optional<Witness> w) {
  if (w) return Verdict::fail(std::move(*w));
  return {};
}

template <class Ops>
Verdict check_A_impl(const Ops& ops) {
  const std::size_t m = ops.t.order();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!ops.eq(ops.get(a, b), ops.get(b, a))) {
        return Verdict::fail({{a, b}, Ops::str(ops.get(a, b)), Ops::str(ops.get(b, a))});
      }
    }
  }
  return {};
}

template <class Ops>
typename Ops::Value jstar_of(const Ops& ops, std::size_t a, std::size_t b) {
  const int d = delta(a) + delta(b);
  if (d == 0) return ops.get(a, b);
  return ops.get(a, b) - ops.constant(d);
}

template <class Ops>
std::pair<typename Ops::Value, typename Ops::Value> b_star_sides(
    const Ops& ops, const std::vector<typename Ops::Value>& js, std::size_t a, std::size_t b,
    std::size_t c) {
  const auto& g = ops.group();
  const std::size_t m = g.order();
  auto lhs = ops.sum();
  lhs.add_product(js[a * m + b], js[g.add(a, b) * m + c]);
  auto rhs = ops.sum();
  rhs.add_product(js[a * m + g.add(b, c)], js[b * m + c]);
  return {lhs.finish(), rhs.finish()};
}

template <class Ops>
std::pair<typename Ops::Value, typename Ops::Value> b_reform_sides(const Ops& ops, std::size_t a,
                                                                   std::size_t b, std::size_t c) {
  const auto& g = ops.group();
  const std::size_t ab = g.add(a, b);
  const std::size_t bc = g.add(b, c);
  auto lhs = ops.sum();
  lhs.add_product(ops.get(a, b), ops.get(ab, c));
  if (delta(ab)) lhs.sub(ops.get(a, g.neg(a)));
  lhs.add_int(delta(a) * delta(b));
  // J(c^-1, c) is the value the expansion of the right-hand J* product
  // produces; it equals J(c, c^-1) whenever (A) holds.
  auto rhs = ops.sum();
  rhs.add_product(ops.get(a, bc), ops.get(b, c));
  if (delta(bc)) rhs.sub(ops.get(g.neg(c), c));
  rhs.add_int(delta(b) * delta(c));
  return {lhs.finish(), rhs.finish()};
}

template <class Ops>
std::vector<typename Ops::Value> jstar_table(const Ops& ops) {
  const std::size_t m = ops.t.order();
  std::vector<typename Ops::Value> js;
  js.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) js.push_back(jstar_of(ops, a, b));
  }
  return js;
}

template <class Ops>
Verdict check_B_star_impl(const Ops& ops, unsigned threads) {
  const std::size_t m = ops.t.order();
  const auto js = jstar_table(ops);
  return from(first_failure(m, threads, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        auto [lhs, rhs] = b_star_sides(ops, js, a, b, c);
        if (!ops.eq(lhs, rhs)) return Witness{{a, b, c}, Ops::str(lhs), Ops::str(rhs)};
      }
    }
    return std::nullopt;
  }));
}

template <class Ops>
Verdict check_B_reform_impl(const Ops& ops, unsigned threads) {
  const std::size_t m = ops.t.order();
  return from(first_failure(m, threads, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        auto [lhs, rhs] = b_reform_sides(ops, a, b, c);
        if (!ops.eq(lhs, rhs)) return Witness{{a, b, c}, Ops::str(lhs), Ops::str(rhs)};
      }
    }
    return std::nullopt;
  }));
}

// One instance of (C); returns a witness if it fails.
template <class Ops>
std::optional<Witness> c_instance(const Ops& ops, std::size_t a1, std::size_t a2, std::size_t a3,
                                  std::size_t a4) {
  const auto& g = ops.group();
  const std::size_t m = g.order();
  auto lhs = ops.sum();
  for (std::size_t b = 0; b < m; ++b) {
    lhs.add_product(ops.get(g.add(a1, b), g.sub(a2, b)), ops.get(g.add(a3, b), g.sub(a4, b)));
  }
  auto value = lhs.finish();
  const auto& rhs = ops.get(g.add(a1, a4), g.add(a2, a3));
  if (ops.eq(value, rhs)) return std::nullopt;
  return Witness{{a1, a2, a3, a4}, Ops::str(value), Ops::str(rhs)};
}

template <class Ops>
Verdict check_C_exhaustive(const Ops& ops, unsigned threads) {
  const std::size_t m = ops.t.order();
  return from(first_failure(m, threads, [&](std::size_t a1) -> std::optional<Witness> {
    for (std::size_t a2 = 0; a2 < m; ++a2) {
      for (std::size_t a3 = 0; a3 < m; ++a3) {
        for (std::size_t a4 = 0; a4 < m; ++a4) {
          if (auto w = c_instance(ops, a1, a2, a3, a4)) return w;
        }
      }
    }
    return std::nullopt;
  }));
}

// (Q_a * Q_b)(chi) against Q_{ab}(chi) for every chi; first failing chi.
template <class Ops>
std::optional<Witness> convolution_pair(const Ops& ops, std::size_t a, std::size_t b) {
  const auto& g = ops.group();
  const std::size_t m = g.order();
  const std::size_t ab = g.add(a, b);
  for (std::size_t chi = 0; chi < m; ++chi) {
    auto lhs = ops.sum();
    for (std::size_t gamma = 0; gamma < m; ++gamma) {
      // Q_a(gamma) = J(a gamma^-1, gamma); Q_b(chi gamma^-1) = J(b chi^-1 gamma, chi gamma^-1)
      const std::size_t rest = g.sub(chi, gamma);
      lhs.add_product(ops.get(g.sub(a, gamma), gamma), ops.get(g.sub(b, rest), rest));
    }
    auto value = lhs.finish();
    const auto& rhs = ops.get(g.sub(ab, chi), chi);
    if (!ops.eq(value, rhs)) return Witness{{a, b, chi}, Ops::str(value), Ops::str(rhs)};
  }
  return std::nullopt;
}

template <class Ops>
Verdict check_C_convolution_direct(const Ops& ops, unsigned threads) {
  const std::size_t m = ops.t.order();
  return from(first_failure(m, threads, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < m; ++b) {
      if (auto w = convolution_pair(ops, a, b)) return w;
    }
    return std::nullopt;
  }));
}

// Exact convolution mode. Since the transform is injective and turns
// convolution into pointwise product, Q_a * Q_b = Q_ab iff
// Qhat_a(x) Qhat_b(x) = Qhat_ab(x) for all x. Pairs are screened on the
// Fourier side; the first failing pair is then scanned directly for chi.
Verdict check_C_convolution_exact(const JacobiTable& t, unsigned threads) {
  const auto& g = t.group();
  const std::size_t m = g.order();
  std::vector<GroupFunction> qhat(m);
  parallel_for(m, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    for (std::size_t a = begin; a < end; ++a) qhat[a] = dft(g, compute_Q(t, a));
  });
  const ExactOps ops{t};
  return from(first_failure(m, threads, [&](std::size_t a) -> std::optional<Witness> {
    for (std::size_t b = 0; b < m; ++b) {
      const auto& target = qhat[g.add(a, b)];
      for (std::size_t x = 0; x < m; ++x) {
        const bool ok = (qhat[a][x].is_zero() || qhat[b][x].is_zero())
                            ? target[x].is_zero()
                            : qhat[a][x] * qhat[b][x] == target[x];
        if (!ok) {
          if (auto w = convolution_pair(ops, a, b)) return w;
          throw Error("convolution check: Fourier and direct routes disagree");
        }
      }
    }
    return std::nullopt;
  }));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

template <class Ops>
Verdict check_C_sampled(const Ops& ops, std::size_t samples, std::uint64_t seed) {
  const std::size_t m = ops.t.order();
  const std::uint64_t total = std::uint64_t(m) * m * m * m;
  auto check_code = [&](std::uint64_t code) {
    const std::size_t a4 = code % m;
    const std::size_t a3 = (code / m) % m;
    const std::size_t a2 = (code / m / m) % m;
    const std::size_t a1 = code / m / m / m;
    return c_instance(ops, a1, a2, a3, a4);
  };
  if (samples >= total) {
    for (std::uint64_t code = 0; code < total; ++code) {
      if (auto w = check_code(code)) return Verdict::fail(std::move(*w));
    }
    return {};
  }
  std::mt19937_64 rng(seed);
  std::set<std::uint64_t> codes;
  for (std::size_t k = 0; k < samples; ++k) codes.insert(uniform_below(rng, total));
  for (auto code : codes) {
    if (auto w = check_code(code)) return Verdict::fail(std::move(*w));
  }
  return {};
}

template <class Ops>
VerificationReport verify_all_impl(const Ops& ops, const VerifyConfig& cfg,
                                   const std::function<Verdict(CMode)>& run_c) {
  VerificationReport r;
  r.a = check_A_impl(ops);
  r.b_star = check_B_star_impl(ops, cfg.threads);
  r.b_reform = check_B_reform_impl(ops, cfg.threads);
  const CMode mode = resolve_cmode(cfg, ops.t.order());
  r.c_mode.mode = mode;
  if (mode == CMode::Sampled) {
    const std::size_t m = ops.t.order();
    r.c_mode.samples = cfg.samples;
    r.c_mode.seed = cfg.seed;
    r.c_mode.full_coverage = cfg.samples >= std::uint64_t(m) * m * m * m;
  }
  if (mode == CMode::Convolution && !r.a.passed()) {
    r.c.status = Verdict::Status::Skipped;
    r.c.note = "convolution mode requires (A)";
  } else {
    r.c = run_c(mode);
  }
  return r;
}

}  // namespace

// --- exact ----------------------------------------------------------------

Verdict check_A(const JacobiTable& t) { return check_A_impl(ExactOps{t}); }

Verdict check_B_star(const JacobiTable& t, unsigned threads) {
  return check_B_star_impl(ExactOps{t}, threads);
}

Verdict check_B_reform(const JacobiTable& t, unsigned threads) {
  return check_B_reform_impl(ExactOps{t}, threads);
}

bool b_star_holds(const JacobiTable& t, std::size_t a, std::size_t b, std::size_t c) {
  const auto& g = t.group();
  return jstar(t, a, b) * jstar(t, g.add(a, b), c) == jstar(t, a, g.add(b, c)) * jstar(t, b, c);
}

bool b_reform_holds(const JacobiTable& t, std::size_t a, std::size_t b, std::size_t c) {
  auto [lhs, rhs] = b_reform_sides(ExactOps{t}, a, b, c);
  return lhs == rhs;
}

Verdict check_C(const JacobiTable& t, CMode mode, const VerifyConfig& cfg) {
  mode = mode == CMode::Auto ? resolve_cmode(cfg, t.order()) : mode;
  const ExactOps ops{t};
  switch (mode) {
    case CMode::Exhaustive: return check_C_exhaustive(ops, cfg.threads);
    case CMode::Convolution:
      if (!check_A(t).passed()) {
        throw PreconditionError("convolution mode for (C) requires (A) to hold");
      }
      return check_C_convolution_exact(t, cfg.threads);
    case CMode::Sampled: return check_C_sampled(ops, cfg.samples, cfg.seed);
    case CMode::Auto: break;
  }
  throw Error("unreachable C mode");
}

VerificationReport verify_all(const JacobiTable& t, const VerifyConfig& cfg) {
  auto report = verify_all_impl(ExactOps{t}, cfg, [&](CMode mode) { return check_C(t, mode, cfg); });
  if (!report.b_forms_agree()) {
    throw Error("internal error: the two forms of (B) disagree");
  }
  return report;
}

// --- approximate ----------------------------------------------------------

Verdict check_A(const ApproxTable& t, double tolerance) {
  return check_A_impl(ApproxOps{t, tolerance});
}

Verdict check_B_star(const ApproxTable& t, double tolerance) {
  return check_B_star_impl(ApproxOps{t, tolerance}, 1);
}

Verdict check_B_reform(const ApproxTable& t, double tolerance) {
  return check_B_reform_impl(ApproxOps{t, tolerance}, 1);
}

Verdict check_C(const ApproxTable& t, CMode mode, const VerifyConfig& cfg) {
  mode = mode == CMode::Auto ? resolve_cmode(cfg, t.order()) : mode;
  const ApproxOps ops{t, cfg.tolerance};
  switch (mode) {
    case CMode::Exhaustive: return check_C_exhaustive(ops, cfg.threads);
    case CMode::Convolution:
      if (!check_A(t, cfg.tolerance).passed()) {
        throw PreconditionError("convolution mode for (C) requires (A) to hold");
      }
      return check_C_convolution_direct(ops, cfg.threads);
    case CMode::Sampled: return check_C_sampled(ops, cfg.samples, cfg.seed);
    case CMode::Auto: break;
  }
  throw Error("unreachable C mode");
}

VerificationReport verify_all(const ApproxTable& t, const VerifyConfig& cfg) {
  const ApproxOps ops{t, cfg.tolerance};
  auto report = verify_all_impl(ops, cfg, [&](CMode mode) { return check_C(t, mode, cfg); });
  report.approximate = true;
  return report;
}

}  // namespace jacobi
