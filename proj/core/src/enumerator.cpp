#include "jacobi/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "jacobi/error.hpp"
#include "jacobi/finite_field.hpp"
#include "jacobi/io.hpp"

namespace jacobi {

namespace {

constexpr unsigned kOracleMaxField = 1u << 10;

// Backtracking over {x, x^-1} orbits of S = dual \ {c}. Choosing i(x) = v
// forces i(x^-1) = v x^-1.
class CandidateSearch {
 public:
  CandidateSearch(const GroupSpec& g, std::size_t c) : g_(g), c_(c), used_(g.order(), false) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (x == c || x > g.neg(x)) continue;
      if (x == g.neg(x) && x != g.identity()) {
        // i(x) = x i(x) forces x = 1: no candidate for this c.
        feasible_ = false;
      }
      reps_.push_back(x);
    }
    used_[g.identity()] = true;
    i_map_.assign(g.order(), std::nullopt);
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (feasible_) step(0, visit);
  }

 private:
  template <class Visit>
  void step(std::size_t k, Visit& visit) {
    if (k == reps_.size()) {
      visit(i_map_);
      return;
    }
    const std::size_t x = reps_[k];
    const std::size_t inv = g_.neg(x);
    for (std::size_t v = 0; v < g_.order(); ++v) {
      if (used_[v]) continue;
      if (x == inv) {
        used_[v] = true;
        i_map_[x] = v;
        step(k + 1, visit);
        used_[v] = false;
        i_map_[x].reset();
        continue;
      }
      const std::size_t w = g_.sub(v, x);
      if (w == v || used_[w]) continue;
      used_[v] = used_[w] = true;
      i_map_[x] = v;
      i_map_[inv] = w;
      step(k + 1, visit);
      used_[v] = used_[w] = false;
      i_map_[x].reset();
      i_map_[inv].reset();
    }
  }

  const GroupSpec& g_;
  std::size_t c_;
  bool feasible_ = true;
  std::vector<std::size_t> reps_;
  std::vector<bool> used_;
  IMap i_map_;
};

}  // namespace

EnumerationResult enumerate_jacobi(const GroupSpec& g, const EnumerateOptions& opts) {
  if (g.order() > opts.max_order) {
    throw DomainError("enumeration is capped at group order " + std::to_string(opts.max_order));
  }
  EnumerationResult result;
  result.group = g;

  VerifyConfig cfg;
  cfg.c_mode = CMode::Exhaustive;
  cfg.threads = opts.threads;

  std::map<std::string, JacobiTable> found;
  for (std::size_t c = 0; c < g.order(); ++c) {
    if (g.add(c, c) != g.identity()) continue;
    CandidateSearch search(g, c);
    search.run([&](const IMap& i_map) {
      std::vector<std::size_t> support;
      std::vector<std::size_t> image;
      for (std::size_t x = 0; x < g.order(); ++x) {
        if (!i_map[x]) continue;
        support.push_back(x);
        image.push_back(*i_map[x]);
      }
      ++result.candidates;
      auto table = table_from_support(g, support, image);
      if (!verify_all(table, cfg).all_pass()) return;
      found.emplace(table_to_json(table).dump(), std::move(table));
    });
  }
  for (auto& [key, table] : found) result.tables.push_back(std::move(table));
  result.count = result.tables.size();
  result.oracle_count = oracle_count(g);
  result.agreement = result.count == result.oracle_count;
  return result;
}

std::vector<AdditionTable> oracle_tables(const GroupSpec& g) {
  const std::size_t m = g.order();
  const auto pp = as_prime_power(static_cast<unsigned>(m + 1));
  if (!pp || m + 1 > kOracleMaxField) return {};
  const FiniteField f = build_field(pp->p, pp->n);

  // A homomorphism dual(M) -> F* = <g> sends generator e_j to g^(t_j) with
  // n_j t_j = 0 mod m; it is x -> g^(sum_j x_j t_j).
  const auto& factors = g.factors();
  std::vector<std::vector<std::size_t>> choices;
  for (auto n : factors) {
    std::vector<std::size_t> opts;
    for (std::size_t t = 0; t < m; t += m / n) opts.push_back(t);
    choices.push_back(std::move(opts));
  }

  std::set<AdditionTable> tables;
  std::vector<std::size_t> pick(factors.size(), 0);
  const std::size_t n = m + 1;
  while (true) {
    // dlog of the image of each element.
    std::vector<std::size_t> image(m);
    std::vector<bool> hit(m, false);
    bool bijective = true;
    for (std::size_t x = 0; x < m && bijective; ++x) {
      const auto coords = g.element(x).coords;
      std::size_t e = 0;
      for (std::size_t j = 0; j < coords.size(); ++j) e += coords[j] * choices[j][pick[j]];
      e %= m;
      image[x] = e;
      bijective = !hit[e];
      hit[e] = true;
    }
    if (bijective) {
      std::vector<std::size_t> preimage(m);
      for (std::size_t x = 0; x < m; ++x) preimage[image[x]] = x;
      auto to_field = [&](Symbol s) -> FieldElement {
        return s == kZeroSymbol ? f.zero() : f.exp(static_cast<std::int64_t>(image[element_of(s)]));
      };
      auto from_field = [&](FieldElement v) -> Symbol {
        return v == f.zero() ? kZeroSymbol : symbol_of(preimage[f.dlog(v)]);
      };
      std::vector<Symbol> table(n * n);
      for (Symbol x = 0; x < n; ++x) {
        for (Symbol y = 0; y < n; ++y) table[x * n + y] = from_field(f.add(to_field(x), to_field(y)));
      }
      tables.emplace(g, std::move(table));
    }
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  return {tables.begin(), tables.end()};
}

std::size_t oracle_count(const GroupSpec& g) { return oracle_tables(g).size(); }

}  // namespace jacobi
