#include "jacobi/jacobi_table.hpp"

#include <numeric>
#include <string>

#include "jacobi/error.hpp"
#include "jacobi/parallel.hpp"

namespace jacobi {

namespace {

void require_unit(long r, std::size_t m, const char* what) {
  if (std::gcd(static_cast<long>(m), r < 0 ? -r : r) != 1) {
    throw DomainError(std::string(what) + ": r = " + std::to_string(r) +
                      " is not coprime to the group order " + std::to_string(m));
  }
}

}  // namespace

JacobiTable::JacobiTable(GroupSpec group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  const std::size_t m = group_.order();
  if (values_.size() != m * m) {
    throw MalformedInput("table for a group of order " + std::to_string(m) + " needs " +
                         std::to_string(m * m) + " entries, got " +
                         std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.conductor() != group_.conductor()) {
      throw MalformedInput("table entry has conductor " + std::to_string(v.conductor()) +
                           ", expected " + std::to_string(group_.conductor()));
    }
  }
}

JacobiTable JacobiTable::with_entry(std::size_t alpha, std::size_t beta, Cyclotomic value) const {
  auto values = values_;
  values.at(alpha * order() + beta) = std::move(value);
  return JacobiTable(group_, std::move(values));
}

ApproxTable embed(const JacobiTable& t) {
  ApproxTable out{t.group(), {}};
  out.values.reserve(t.values().size());
  for (const auto& v : t.values()) out.values.push_back(v.embed());
  return out;
}

JacobiTable compute_jacobi(const FiniteField& f, unsigned threads) {
  const unsigned m = f.unit_order();
  GroupSpec group = GroupSpec::cyclic(m);

  // Discrete logs of the q-2 solutions of x + y = 1 with x, y nonzero.
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (FieldElement x = 1; x < f.order(); ++x) {
    const FieldElement y = f.sub(f.one(), x);
    if (y != 0) pairs.emplace_back(f.dlog(x), f.dlog(y));
  }

  std::vector<Cyclotomic> values(static_cast<std::size_t>(m) * m);
  const Rational scale(1, m);
  parallel_for(m, resolve_threads(threads), [&](std::size_t begin, std::size_t end) {
    std::vector<long> counts(m);
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        std::fill(counts.begin(), counts.end(), 0);
        for (const auto& [s, t] : pairs) ++counts[(a * s + b * t) % m];
        CyclotomicAccumulator acc(m);
        for (unsigned e = 0; e < m; ++e) {
          if (counts[e] != 0) acc.add_root(e, counts[e]);
        }
        acc.scale(scale);
        values[a * m + b] = acc.finish();
      }
    }
  });
  return JacobiTable(std::move(group), std::move(values));
}

Cyclotomic jstar(const JacobiTable& t, std::size_t alpha, std::size_t beta) {
  const int d = delta(alpha) + delta(beta);
  if (d == 0) return t(alpha, beta);
  return t(alpha, beta) - Cyclotomic::from_rational(t.conductor(), d);
}

GroupFunction compute_Q(const JacobiTable& t, std::size_t alpha) {
  const auto& g = t.group();
  GroupFunction q;
  q.reserve(g.order());
  for (std::size_t beta = 0; beta < g.order(); ++beta) q.push_back(t(g.sub(alpha, beta), beta));
  return q;
}

JacobiTable twist_pre(const JacobiTable& t, long r) {
  const auto& g = t.group();
  const std::size_t m = g.order();
  require_unit(r, m, "twist_pre");
  std::vector<std::size_t> power(m);
  for (std::size_t a = 0; a < m; ++a) power[a] = g.times(a, r);
  std::vector<Cyclotomic> values;
  values.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) values.push_back(t(power[a], power[b]));
  }
  return JacobiTable(g, std::move(values));
}

JacobiTable twist_galois(const JacobiTable& t, long r) {
  require_unit(r, t.order(), "twist_galois");
  std::vector<Cyclotomic> values;
  values.reserve(t.values().size());
  for (const auto& v : t.values()) values.push_back(v.galois(r));
  return JacobiTable(t.group(), std::move(values));
}

JacobiTable table_from_support(const GroupSpec& g, std::span<const std::size_t> support,
                               std::span<const std::size_t> image) {
  if (support.size() != image.size()) throw MalformedInput("support and image sizes differ");
  // Pairs (i(x), i(x) x^{-1}) for x in S.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t k = 0; k < support.size(); ++k) {
    pairs.emplace_back(image[k], g.sub(image[k], support[k]));
  }
  return table_from_pairs(g, pairs);
}

JacobiTable table_from_pairs(const GroupSpec& g,
                             std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  const std::size_t m = g.order();
  const Rational scale(1, static_cast<unsigned long>(m));
  std::vector<Cyclotomic> values;
  values.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      CyclotomicAccumulator acc(g.conductor());
      for (const auto& [x, y] : pairs) acc.add_root(g.pairing(a, x) + g.pairing(b, y));
      acc.scale(scale);
      values.push_back(acc.finish());
    }
  }
  return JacobiTable(g, std::move(values));
}

}  // namespace jacobi
