// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "jacobi/enumerator.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/reconstructor.hpp"
#include "jacobi/verifier.hpp"
#include "support.hpp"

namespace jacobi {
namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs_text(double secs) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  return buf;
}

const std::vector<unsigned> kFieldOrders{3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

unsigned threads() { return resolve_threads(0); }

Result axiom_suite() {
  Result r;
  const auto start = Clock::now();
  for (unsigned q : kFieldOrders) {
    const auto t = compute_jacobi(testing::field_of_order(q), threads());
    const std::string at = " for q = " + std::to_string(q);
    if (!check_A(t).passed()) r.fail("A fails" + at);
    if (!check_B_star(t, threads()).passed()) r.fail("B (J*) fails" + at);
    if (!check_B_reform(t, threads()).passed()) r.fail("B (reformulated) fails" + at);
    VerifyConfig cfg;
    cfg.threads = threads();
    const auto mode = q - 1 <= 10 ? CMode::Exhaustive : CMode::Convolution;
    if (!check_C(t, mode, cfg).passed()) r.fail("C fails" + at);
  }
  const double secs = seconds_since(start);
  if (secs > 300) r.fail("took " + secs_text(secs));
  if (r.pass) r.detail = std::to_string(kFieldOrders.size()) + " fields, " + secs_text(secs);
  return r;
}

Result round_trip() {
  Result r;
  double worst = 0;
  for (unsigned q : kFieldOrders) {
    const auto start = Clock::now();
    const auto f = testing::field_of_order(q);
    const auto t = compute_jacobi(f, threads());
    ReconstructOptions opts;
    opts.verify.threads = threads();
    const auto rep = reconstruct(t, opts);
    const std::string at = " for q = " + std::to_string(q);
    if (!rep.ok()) r.fail("pipeline not ok" + at);
    if (!rep.is_field()) {
      r.fail("not the field case" + at);
      continue;
    }
    if (std::get<FieldCase>(rep.outcome).c != f.dlog(f.neg(f.one()))) r.fail("c != dlog(-1)" + at);
    for (auto x : rep.support) {
      const FieldElement fx = f.exp(x);
      if (rep.i_map[x] != f.dlog(f.div(fx, f.add(f.one(), fx)))) r.fail("i(x) != x/(1+x)" + at);
    }
    if (!(rep.addition && *rep.addition == field_addition(f))) r.fail("addition differs" + at);
    if (!(rep.addition && table_from_addition(*rep.addition) == t)) r.fail("recomputed table differs" + at);
    const double secs = seconds_since(start);
    worst = std::max(worst, secs);
    if (secs > 60) r.fail("over 60 s" + at);
  }
  if (r.pass) r.detail = "slowest field " + secs_text(worst);
  return r;
}

Result reform_equivalence() {
  Result r;
  testing::Rng rng(20240601);
  const auto groups = testing::small_groups();
  std::size_t tables = 0, triples = 0, failing = 0;
  for (int k = 0; k < 140; ++k) {
    const auto& g = groups[1 + k % (groups.size() - 1)];
    const auto t = rng.table(g);
    ++tables;
    for (std::size_t a = 0; a < g.order(); ++a)
      for (std::size_t b = 0; b < g.order(); ++b)
        for (std::size_t c = 0; c < g.order(); ++c) {
          ++triples;
          const bool star = b_star_holds(t, a, b, c);
          failing += !star;
          if (star != b_reform_holds(t, a, b, c)) r.fail("disagreement on " + g.to_string());
        }
  }
  if (failing == 0) r.fail("no failing triple exercised");
  if (r.pass) {
    r.detail = std::to_string(tables) + " tables, " + std::to_string(triples) + " triples (" +
               std::to_string(failing) + " failing under both)";
  }
  return r;
}

Result trivial_group() {
  Result r;
  std::vector<Rational> values;
  for (long a = -2; a <= 3; ++a) values.emplace_back(a);
  for (auto [n, d] : {std::pair{1, 2}, {-1, 3}, {5, 4}, {2, 3}, {7, 5}, {-3, 2}}) values.emplace_back(n, d);
  for (auto& v : values) v.canonicalize();
  std::size_t accepted = 0;
  for (const auto& a : values) {
    const JacobiTable t(GroupSpec(), {Cyclotomic::from_rational(1, a)});
    const bool ok = verify_all(t).all_pass();
    accepted += ok;
    if (ok != (a == 0 || a == 1)) r.fail("verdict wrong for J(1,1) = " + a.get_str());
  }
  const auto f2 = reconstruct(JacobiTable(GroupSpec(), {Cyclotomic::zero(1)}));
  if (!f2.is_field() || !f2.ok() || f2.addition->table() != field_addition(testing::field_of_order(2)).table()) {
    r.fail("a = 0 is not reconstructed as F_2");
  }
  const auto boolean = reconstruct(JacobiTable(GroupSpec(), {Cyclotomic::one(1)}));
  if (!boolean.is_boolean() || !boolean.ok()) r.fail("a = 1 is not the boolean case");
  if (r.pass) {
    r.detail = std::to_string(accepted) + " of " + std::to_string(values.size()) +
               " values accepted; a = 0 -> F_2, a = 1 -> boolean";
  }
  return r;
}

Result enumeration() {
  Result r;
  const auto start = Clock::now();
  std::ostringstream counts;
  for (const auto& g : {GroupSpec({2}), GroupSpec({3}), GroupSpec({4}), GroupSpec({2, 2}),
                        GroupSpec({5}), GroupSpec({6})}) {
    EnumerateOptions opts;
    opts.threads = threads();
    const auto e = enumerate_jacobi(g, opts);
    counts << g.to_string() << ":" << e.count << " ";
    if (e.count != e.oracle_count) r.fail("count differs from oracle on " + g.to_string());
    std::set<AdditionTable> found;
    for (const auto& t : e.tables) {
      const auto rep = reconstruct(t);
      if (!rep.is_field()) {
        r.fail("enumerated table is not a field table on " + g.to_string());
        continue;
      }
      found.insert(*rep.addition);
    }
    const auto oracle = oracle_tables(g);
    if (found != std::set<AdditionTable>(oracle.begin(), oracle.end())) {
      r.fail("addition tables differ from oracle on " + g.to_string());
    }
    if (g.factors() == std::vector<unsigned>{2, 2} && e.count != 0) r.fail("Z/2 x Z/2 count is not 0");
  }
  const double secs = seconds_since(start);
  if (secs > 120) r.fail("took " + secs_text(secs));
  if (r.pass) r.detail = counts.str() + "(" + secs_text(secs) + ")";
  return r;
}

Result twists() {
  Result r;
  std::size_t checked = 0;
  for (unsigned q : {5u, 7u, 13u}) {
    const auto f = testing::field_of_order(q);
    const auto t = compute_jacobi(f);
    const unsigned m = q - 1;
    for (unsigned k = 1; k <= m; ++k) {
      if (std::gcd(k, m) != 1) continue;
      const std::string at = " for q = " + std::to_string(q) + ", r = " + std::to_string(k);
      const auto pre = twist_pre(t, k);
      if (!(pre == twist_galois(t, k))) r.fail("twists differ" + at);
      VerifyConfig cfg;
      cfg.c_mode = CMode::Exhaustive;
      if (!verify_all(pre, cfg).all_pass()) r.fail("twisted table fails the axioms" + at);
      const auto rep = reconstruct(pre);
      if (!rep.ok() || !rep.addition || *rep.addition != field_addition(f, k)) {
        r.fail("twisted table does not give the conjugated addition" + at);
      }
      ++checked;
    }
  }
  if (r.pass) r.detail = std::to_string(checked) + " (q, r) pairs";
  return r;
}

// Tables built as (1/m) sum over all x of alpha(i(x)) beta(i(x)/x) for a
// bijection i, plus random perturbations of them.
Result degeneracy() {
  Result r;
  testing::Rng rng(7);
  std::size_t tables = 0, verified = 0, boolean = 0;
  auto examine = [&](const JacobiTable& t) {
    ++tables;
    ReconstructOptions force;
    force.force = true;
    const auto rep = reconstruct(t, force);
    const bool ok = rep.verification && rep.verification->all_pass();
    verified += ok;
    if (rep.is_boolean()) {
      ++boolean;
      r.fail("case (b) reported on " + t.group().to_string());
    }
  };
  for (const auto& g : {GroupSpec({2}), GroupSpec({3}), GroupSpec({4}), GroupSpec({2, 2}), GroupSpec({5}),
                        GroupSpec({6}), GroupSpec({7}), GroupSpec({3, 3})}) {
    const std::size_t m = g.order();
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<std::size_t>> images;
    if (m <= 5) {
      auto perm = all;
      do images.push_back(perm);
      while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      std::mt19937_64 shuffle(m);
      for (int k = 0; k < 60; ++k) {
        auto perm = all;
        std::shuffle(perm.begin(), perm.end(), shuffle);
        images.push_back(perm);
      }
    }
    for (const auto& image : images) {
      IMap i(m);
      for (std::size_t x = 0; x < m; ++x) i[x] = image[x];
      if (!std::holds_alternative<Inconsistent>(classify_case(g, all, i))) {
        r.fail("full support classified as consistent on " + g.to_string());
      }
      const auto t = table_from_support(g, all, image);
      examine(t);
      const auto a = rng.below(m), b = rng.below(m);
      examine(t.with_entry(a, b, t(a, b) + rng.cyclotomic(g.conductor())));
    }
  }
  if (r.pass) {
    r.detail = std::to_string(tables) + " tables, " + std::to_string(verified) +
               " verified, 0 case (b) classifications";
  }
  return r;
}

Result float_path() {
  Result r;
  const auto t = compute_jacobi(testing::field_of_order(9));
  const auto exact = reconstruct(t);
  auto noisy = embed(t);
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> noise(-1e-9, 1e-9);
  for (auto& v : noisy.values) v += std::complex<double>(noise(rng), noise(rng));
  ReconstructOptions opts;
  opts.verify.tolerance = 1e-6;
  const auto approx = reconstruct(noisy, opts);
  if (!approx.ok()) r.fail("approximate pipeline not ok");
  if (approx.support != exact.support) r.fail("S differs");
  if (approx.i_map != exact.i_map) r.fail("i differs");
  if (!approx.is_field() || std::get<FieldCase>(approx.outcome).c != std::get<FieldCase>(exact.outcome).c) {
    r.fail("c differs");
  }
  if (!approx.addition || *approx.addition != *exact.addition) r.fail("addition table differs");
  if (r.pass) r.detail = "GF(9) with 1e-9 noise, tolerance 1e-6";
  return r;
}

}  // namespace
}  // namespace jacobi

int main() {
  using namespace jacobi;
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"axiom suite on GF(q), q <= 32", axiom_suite},
      {"round trip recovers GF(q) exactly", round_trip},
      {"(B) checkers agree per triple", reform_equivalence},
      {"trivial group: a = 0 and a = 1 only", trivial_group},
      {"enumeration matches field oracle", enumeration},
      {"twists coincide and conjugate addition", twists},
      {"full-support inputs never pass as case (b)", degeneracy},
      {"float path matches exact path", float_path},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Result res;
    try {
      res = criteria[k].second();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    failed += !res.pass;
    std::printf("%s %zu  %-44s %s\n", res.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                res.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
