#include "jacobi/reconstructor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "jacobi/error.hpp"
#include "jacobi/finite_field.hpp"

namespace jacobi {

// --- AdditionTable --------------------------------------------------------

AdditionTable::AdditionTable(GroupSpec group, std::vector<Symbol> table)
    : group_(std::move(group)), n_(group_.order() + 1), table_(std::move(table)) {
  if (table_.size() != n_ * n_) {
    throw MalformedInput("addition table needs " + std::to_string(n_ * n_) + " entries");
  }
  for (auto s : table_) {
    if (s >= n_) throw MalformedInput("addition table symbol out of range");
  }
}

Symbol AdditionTable::product(Symbol x, Symbol y) const {
  if (x == kZeroSymbol || y == kZeroSymbol) return kZeroSymbol;
  return symbol_of(group_.add(element_of(x), element_of(y)));
}

AdditionTable AdditionTable::with_entry(Symbol x, Symbol y, Symbol value) const {
  auto table = table_;
  table.at(x * n_ + y) = value;
  return AdditionTable(group_, std::move(table));
}

bool ReconstructionReport::ok() const {
  if (is_inconsistent() || !kappa_ok || !roundtrip_ok) return false;
  if (verification && !verification->all_pass()) return false;
  if (field_checks && !field_checks->all_pass()) return false;
  return true;
}

// --- pipeline stages ------------------------------------------------------

Outcome<std::vector<std::size_t>> support_S(const JacobiTable& t) {
  const auto& g = t.group();
  const auto q1hat = dft(g, compute_Q(t, g.identity()));
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q1hat[x].is_zero()) continue;
    if (!q1hat[x].is_one()) {
      return Inconsistent{"support_S", "Qhat_1(x) = " + q1hat[x].to_string() + " is neither 0 nor 1",
                          {x}};
    }
    support.push_back(x);
  }
  return support;
}

namespace {

void require_generators(const GroupSpec& g, const std::vector<std::size_t>& gens) {
  for (auto a : gens) {
    if (a >= g.order()) throw MalformedInput("generator index out of range");
  }
  if (!g.generates(gens)) throw PreconditionError("the given elements do not generate the group");
}

// The unique y with pairing(gens[j], y) = exps[j] for all j.
Outcome<std::size_t> solve_character(const GroupSpec& g, const std::vector<std::size_t>& gens,
                                     const std::vector<unsigned>& exps, std::size_t x) {
  std::optional<std::size_t> found;
  for (std::size_t y = 0; y < g.order(); ++y) {
    bool match = true;
    for (std::size_t j = 0; j < gens.size() && match; ++j) match = g.pairing(gens[j], y) == exps[j];
    if (!match) continue;
    if (found) return Inconsistent{"recover_i", "several elements match the character at x", {x}};
    found = y;
  }
  if (!found) return Inconsistent{"recover_i", "no element matches the character at x", {x}};
  return *found;
}

}  // namespace

Outcome<IMap> recover_i(const JacobiTable& t, const std::vector<std::size_t>& support,
                        const std::vector<std::size_t>& generators, bool strict) {
  const auto& g = t.group();
  require_generators(g, generators);
  std::vector<GroupFunction> qhat;
  qhat.reserve(generators.size());
  for (auto a : generators) qhat.push_back(dft(g, compute_Q(t, a)));

  IMap i_map(g.order());
  for (auto x : support) {
    std::vector<unsigned> exps;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto e = qhat[j][x].root_exponent();
      if (!e) {
        return Inconsistent{"recover_i",
                            "Qhat_alpha(x) = " + qhat[j][x].to_string() + " is not a root of unity",
                            {generators[j], x}};
      }
      exps.push_back(*e);
    }
    auto y = solve_character(g, generators, exps, x);
    if (auto* bad = std::get_if<Inconsistent>(&y)) return *bad;
    i_map[x] = std::get<std::size_t>(y);
  }

  if (strict) {
    for (std::size_t a = 0; a < g.order(); ++a) {
      const auto full = dft(g, compute_Q(t, a));
      for (auto x : support) {
        if (full[x] != Cyclotomic::root_power(g.conductor(), g.pairing(a, *i_map[x]))) {
          return Inconsistent{"recover_i", "Qhat_alpha(x) differs from alpha(i(x))", {a, x}};
        }
      }
    }
  }
  return i_map;
}

CaseResult classify_case(const GroupSpec& g, const std::vector<std::size_t>& support,
                         const IMap& i_map) {
  const std::size_t m = g.order();
  std::vector<bool> in_s(m, false);
  for (auto x : support) in_s[x] = true;
  for (auto x : support) {
    if (!i_map.at(x)) return Inconsistent{"classify_case", "i undefined on S", {x}};
  }
  for (auto x : support) {
    const auto inv = g.neg(x);
    if (!in_s[inv]) return Inconsistent{"classify_case", "S is not closed under inversion", {x}};
    if (*i_map[x] != g.add(x, *i_map[inv])) {
      return Inconsistent{"classify_case", "i(x) != x i(x^-1)", {x}};
    }
  }
  if (support.size() == m) {
    if (m == 1) return BooleanCase{};
    return Inconsistent{"classify_case",
                        "S is the whole dual group, which only the trivial group admits",
                        {}};
  }
  if (support.size() + 1 != m) {
    return Inconsistent{"classify_case",
                        "|S| = " + std::to_string(support.size()) + ", expected m-1 or m", {}};
  }
  std::size_t c = 0;
  while (in_s[c]) ++c;
  if (g.add(c, c) != g.identity()) return Inconsistent{"classify_case", "c^2 != 1", {c}};
  std::vector<bool> hit(m, false);
  for (auto x : support) {
    const auto y = *i_map[x];
    if (y == g.identity() || hit[y]) {
      return Inconsistent{"classify_case", "i is not a bijection onto the non-identity elements",
                          {x}};
    }
    hit[y] = true;
  }
  return FieldCase{c};
}

AdditionTable build_addition(const GroupSpec& g, std::size_t c, const IMap& i_map) {
  const std::size_t n = g.order() + 1;
  std::vector<Symbol> table(n * n, kZeroSymbol);
  for (Symbol x = 0; x < n; ++x) {
    table[x] = x;
    table[x * n] = x;
  }
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      Symbol s = kZeroSymbol;
      if (a != g.add(c, b)) {
        const auto& i = i_map.at(g.sub(a, b));
        if (!i) throw PreconditionError("build_addition: i undefined at x/y");
        s = symbol_of(g.sub(a, *i));
      }
      table[symbol_of(a) * n + symbol_of(b)] = s;
    }
  }
  return AdditionTable(g, std::move(table));
}

FieldChecks verify_field(const AdditionTable& at) {
  FieldChecks fc;
  const std::size_t n = at.carrier_size();
  auto fail = [](LawCheck& law, std::vector<Symbol> w) {
    if (law.pass) {
      law.pass = false;
      law.witness = std::move(w);
    }
  };

  for (Symbol x = 0; x < n; ++x) {
    if (at.sum(kZeroSymbol, x) != x || at.sum(x, kZeroSymbol) != x) fail(fc.identity, {x});
    bool has_inverse = false;
    for (Symbol y = 0; y < n && !has_inverse; ++y) has_inverse = at.sum(x, y) == kZeroSymbol;
    if (!has_inverse) fail(fc.inverses, {x});
    for (Symbol y = 0; y < n; ++y) {
      if (at.sum(x, y) != at.sum(y, x)) fail(fc.commutative, {x, y});
      for (Symbol z = 0; z < n; ++z) {
        if (fc.associative.pass && at.sum(at.sum(x, y), z) != at.sum(x, at.sum(y, z))) {
          fail(fc.associative, {x, y, z});
        }
        if (fc.distributive.pass &&
            at.product(z, at.sum(x, y)) != at.sum(at.product(z, x), at.product(z, y))) {
          fail(fc.distributive, {x, y, z});
        }
      }
    }
  }

  const Symbol one = symbol_of(at.group().identity());
  Symbol s = one;
  unsigned k = 1;
  while (s != kZeroSymbol && k <= n) {
    s = at.sum(s, one);
    ++k;
  }
  if (s == kZeroSymbol) {
    fc.characteristic = k;
    if (auto pp = as_prime_power(static_cast<unsigned>(n)); pp && pp->p == k) fc.degree = pp->n;
  }
  return fc;
}

JacobiTable table_from_addition(const AdditionTable& at) {
  const auto& g = at.group();
  const Symbol one = symbol_of(g.identity());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (Symbol x = 1; x < at.carrier_size(); ++x) {
    for (Symbol y = 1; y < at.carrier_size(); ++y) {
      if (at.sum(x, y) == one) pairs.emplace_back(element_of(x), element_of(y));
    }
  }
  return table_from_pairs(g, pairs);
}

AdditionTable field_addition(const FiniteField& f, long r) {
  const unsigned m = f.unit_order();
  if (std::gcd(static_cast<unsigned>(mod_exponent(r, m)), m) != 1) {
    throw DomainError("field_addition: r must be coprime to q-1");
  }
  auto symbol = [&](FieldElement x) -> Symbol {
    return x == f.zero() ? kZeroSymbol : symbol_of(mod_exponent(std::int64_t(r) * f.dlog(x), m));
  };
  const std::size_t n = f.order();
  std::vector<Symbol> table(n * n);
  for (FieldElement x = 0; x < f.order(); ++x) {
    for (FieldElement y = 0; y < f.order(); ++y) table[symbol(x) * n + symbol(y)] = symbol(f.add(x, y));
  }
  return AdditionTable(GroupSpec::cyclic(m), std::move(table));
}

// --- approximate stages ---------------------------------------------------

Outcome<std::vector<std::size_t>> support_S(const ApproxTable& t, double tolerance) {
  const auto& g = t.group;
  ApproxFunction q1(g.order());
  for (std::size_t b = 0; b < g.order(); ++b) q1[b] = t(g.neg(b), b);
  const auto q1hat = dft(g, q1);
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (std::abs(q1hat[x]) <= tolerance) continue;
    if (std::abs(q1hat[x] - 1.0) > tolerance) {
      return Inconsistent{"support_S", "Qhat_1(x) is not within tolerance of 0 or 1", {x}};
    }
    support.push_back(x);
  }
  return support;
}

Outcome<IMap> recover_i(const ApproxTable& t, const std::vector<std::size_t>& support,
                        const std::vector<std::size_t>& generators, double tolerance) {
  const auto& g = t.group;
  require_generators(g, generators);
  const std::size_t m = g.order();
  std::vector<ApproxFunction> qhat;
  for (auto a : generators) {
    ApproxFunction q(m);
    for (std::size_t b = 0; b < m; ++b) q[b] = t(g.sub(a, b), b);
    qhat.push_back(dft(g, q));
  }
  IMap i_map(m);
  for (auto x : support) {
    std::vector<unsigned> exps;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const auto v = qhat[j][x];
      const double turns = std::arg(v) / (2.0 * std::numbers::pi) * static_cast<double>(m);
      const auto e = mod_exponent(std::llround(turns), static_cast<unsigned>(m));
      const auto root = std::polar(1.0, 2.0 * std::numbers::pi * e / static_cast<double>(m));
      if (std::abs(v - root) > tolerance) {
        return Inconsistent{"recover_i", "Qhat_alpha(x) is not within tolerance of a root of unity",
                            {generators[j], x}};
      }
      exps.push_back(e);
    }
    auto y = solve_character(g, generators, exps, x);
    if (auto* bad = std::get_if<Inconsistent>(&y)) return *bad;
    i_map[x] = std::get<std::size_t>(y);
  }
  return i_map;
}

// --- end to end -----------------------------------------------------------

namespace {

std::vector<std::size_t> generators_for(const GroupSpec& g, const ReconstructOptions& opts) {
  return opts.generators.empty() ? g.standard_generators() : opts.generators;
}

std::string failed_axioms(const VerificationReport& v) {
  std::string out;
  auto add = [&](bool ok, const char* name) {
    if (ok) return;
    if (!out.empty()) out += ", ";
    out += name;
  };
  add(v.a.passed(), "(A)");
  add(v.b_star.passed() && v.b_reform.passed(), "(B)");
  add(v.c.passed(), "(C)");
  return out;
}

// Everything after S and i are known; shared by the exact and approximate
// paths. Returns the table rebuilt from the recovered structure.
std::optional<JacobiTable> finish(ReconstructionReport& r, const GroupSpec& g) {
  std::vector<std::size_t> aligned;
  for (auto x : r.support) aligned.push_back(*r.i_map[x]);
  r.image = aligned;
  std::sort(r.image.begin(), r.image.end());
  r.outcome = classify_case(g, r.support, r.i_map);
  if (const auto* fc = std::get_if<FieldCase>(&r.outcome)) {
    r.addition = build_addition(g, fc->c, r.i_map);
    r.field_checks = verify_field(*r.addition);
    return table_from_addition(*r.addition);
  }
  if (r.is_boolean()) {
    return table_from_support(g, r.support, aligned);
  }
  return std::nullopt;
}

}  // namespace

ReconstructionReport reconstruct(const JacobiTable& t, const ReconstructOptions& opts) {
  ReconstructionReport r;
  const auto& g = t.group();
  r.group = g;
  r.verification = verify_all(t, opts.verify);
  if (!r.verification->all_pass() && !opts.force) {
    r.outcome = Inconsistent{"verify", "axioms failed: " + failed_axioms(*r.verification), {}};
    return r;
  }

  r.kappa = t(g.identity(), g.identity()) - Cyclotomic::one(g.conductor());
  r.kappa_ok = true;
  for (std::size_t a = 0; a < g.order() && r.kappa_ok; ++a) {
    r.kappa_ok = t(g.identity(), a) == *r.kappa + Cyclotomic::from_rational(g.conductor(), delta(a));
  }

  auto s = support_S(t);
  if (auto* bad = std::get_if<Inconsistent>(&s)) {
    r.outcome = *bad;
    return r;
  }
  r.support = std::get<std::vector<std::size_t>>(s);

  auto i = recover_i(t, r.support, generators_for(g, opts), opts.strict);
  if (auto* bad = std::get_if<Inconsistent>(&i)) {
    r.outcome = *bad;
    return r;
  }
  r.i_map = std::get<IMap>(i);

  if (auto rebuilt = finish(r, g)) r.roundtrip_ok = *rebuilt == t;
  return r;
}

ReconstructionReport reconstruct(const ApproxTable& t, const ReconstructOptions& opts) {
  ReconstructionReport r;
  r.approximate = true;
  const auto& g = t.group;
  const double tol = opts.verify.tolerance;
  r.group = g;
  r.verification = verify_all(t, opts.verify);
  if (!r.verification->all_pass() && !opts.force) {
    r.outcome = Inconsistent{"verify", "axioms failed: " + failed_axioms(*r.verification), {}};
    return r;
  }

  auto s = support_S(t, tol);
  if (auto* bad = std::get_if<Inconsistent>(&s)) {
    r.outcome = *bad;
    return r;
  }
  r.support = std::get<std::vector<std::size_t>>(s);

  auto i = recover_i(t, r.support, generators_for(g, opts), tol);
  if (auto* bad = std::get_if<Inconsistent>(&i)) {
    r.outcome = *bad;
    return r;
  }
  r.i_map = std::get<IMap>(i);

  const auto rebuilt = finish(r, g);
  if (!rebuilt) return r;

  // kappa is read off the exact rebuilt table; the input is compared to it.
  r.kappa = (*rebuilt)(g.identity(), g.identity()) - Cyclotomic::one(g.conductor());
  const auto kappa_num = r.kappa->embed();
  r.kappa_ok = true;
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (std::abs(t(g.identity(), a) - (kappa_num + static_cast<double>(delta(a)))) > tol) {
      r.kappa_ok = false;
    }
  }
  const auto approx = embed(*rebuilt);
  r.roundtrip_ok = true;
  for (std::size_t k = 0; k < approx.values.size(); ++k) {
    if (std::abs(approx.values[k] - t.values[k]) > tol) r.roundtrip_ok = false;
  }
  return r;
}

}  // namespace jacobi
