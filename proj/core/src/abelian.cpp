#include "jacobi/abelian.hpp"

#include <numbers>
#include <sstream>

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

// Dense m x m tables are precomputed per group.
constexpr std::size_t kMaxGroupOrder = 1024;

void check_size(const GroupSpec& g, std::size_t n, const char* what) {
  if (n != g.order()) {
    throw MalformedInput(std::string(what) + ": function has " + std::to_string(n) +
                         " values, group order is " + std::to_string(g.order()));
  }
}

}  // namespace

GroupSpec::GroupSpec(std::vector<unsigned> factors) : factors_(std::move(factors)), m_(1) {
  for (auto n : factors_) {
    if (n < 1) throw MalformedInput("group factor must be >= 1");
    m_ *= n;
    if (m_ > kMaxGroupOrder) {
      throw DomainError("group order exceeds supported maximum " + std::to_string(kMaxGroupOrder));
    }
  }

  std::vector<GroupElement> elems;
  elems.reserve(m_);
  for (std::size_t i = 0; i < m_; ++i) elems.push_back(element(i));

  add_.resize(m_ * m_);
  pair_.resize(m_ * m_);
  neg_.resize(m_);
  GroupElement tmp{std::vector<unsigned>(factors_.size())};
  for (std::size_t a = 0; a < m_; ++a) {
    for (std::size_t j = 0; j < factors_.size(); ++j) {
      tmp.coords[j] = (factors_[j] - elems[a].coords[j]) % factors_[j];
    }
    neg_[a] = index(tmp);
    for (std::size_t b = 0; b < m_; ++b) {
      std::size_t e = 0;
      for (std::size_t j = 0; j < factors_.size(); ++j) {
        const unsigned n = factors_[j];
        tmp.coords[j] = (elems[a].coords[j] + elems[b].coords[j]) % n;
        e += static_cast<std::size_t>(elems[a].coords[j]) * elems[b].coords[j] * (m_ / n);
      }
      add_[a * m_ + b] = index(tmp);
      pair_[a * m_ + b] = static_cast<unsigned>(e % m_);
    }
  }
}

std::size_t GroupSpec::times(std::size_t a, long k) const {
  const long n = static_cast<long>(element_order(a));
  long r = k % n;
  if (r < 0) r += n;
  std::size_t out = identity();
  for (long i = 0; i < r; ++i) out = add(out, a);
  return out;
}

unsigned GroupSpec::pairing(const GroupElement& alpha, const GroupElement& x) const {
  return pairing(index(alpha), index(x));
}

GroupElement GroupSpec::element(std::size_t idx) const {
  if (idx >= m_) throw MalformedInput("element index " + std::to_string(idx) + " out of range");
  GroupElement e{std::vector<unsigned>(factors_.size())};
  for (std::size_t j = factors_.size(); j-- > 0;) {
    e.coords[j] = static_cast<unsigned>(idx % factors_[j]);
    idx /= factors_[j];
  }
  return e;
}

std::size_t GroupSpec::index(const GroupElement& e) const {
  if (e.coords.size() != factors_.size()) {
    throw MalformedInput("element has " + std::to_string(e.coords.size()) +
                         " coordinates, group has " + std::to_string(factors_.size()) + " factors");
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (e.coords[j] >= factors_[j]) {
      throw MalformedInput("coordinate " + std::to_string(e.coords[j]) + " out of range for Z/" +
                           std::to_string(factors_[j]));
    }
    idx = idx * factors_[j] + e.coords[j];
  }
  return idx;
}

std::vector<std::size_t> GroupSpec::standard_generators() const {
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (factors_[j] == 1) continue;
    GroupElement e{std::vector<unsigned>(factors_.size(), 0)};
    e.coords[j] = 1;
    gens.push_back(index(e));
  }
  return gens;
}

bool GroupSpec::generates(std::span<const std::size_t> gens) const {
  std::vector<bool> seen(m_, false);
  std::vector<std::size_t> frontier{identity()};
  seen[identity()] = true;
  std::size_t count = 1;
  while (!frontier.empty()) {
    const auto a = frontier.back();
    frontier.pop_back();
    for (auto g : gens) {
      const auto b = add(a, g);
      if (!seen[b]) {
        seen[b] = true;
        ++count;
        frontier.push_back(b);
      }
    }
  }
  return count == m_;
}

std::size_t GroupSpec::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity(); x = add(x, a)) ++k;
  return k;
}

std::string GroupSpec::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    if (j) os << " x ";
    os << "Z/" << factors_[j];
  }
  return os.str();
}

GroupFunction dft(const GroupSpec& g, const GroupFunction& f) {
  check_size(g, f.size(), "dft");
  const std::size_t m = g.order();
  GroupFunction out;
  out.reserve(m);
  for (std::size_t x = 0; x < m; ++x) {
    CyclotomicAccumulator acc(g.conductor());
    for (std::size_t a = 0; a < m; ++a) acc.add(f[a], g.pairing(a, x));
    out.push_back(acc.finish());
  }
  return out;
}

GroupFunction idft(const GroupSpec& g, const GroupFunction& fhat) {
  check_size(g, fhat.size(), "idft");
  const std::size_t m = g.order();
  GroupFunction out;
  out.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    CyclotomicAccumulator acc(g.conductor());
    for (std::size_t x = 0; x < m; ++x) {
      acc.add(fhat[x], -static_cast<std::int64_t>(g.pairing(a, x)));
    }
    acc.scale(Rational(1, static_cast<unsigned long>(m)));
    out.push_back(acc.finish());
  }
  return out;
}

GroupFunction convolve(const GroupSpec& g, const GroupFunction& f1, const GroupFunction& f2) {
  check_size(g, f1.size(), "convolve");
  check_size(g, f2.size(), "convolve");
  const std::size_t m = g.order();
  GroupFunction out;
  out.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    CyclotomicAccumulator acc(g.conductor());
    for (std::size_t b = 0; b < m; ++b) acc.add_product(f1[b], f2[g.sub(a, b)]);
    out.push_back(acc.finish());
  }
  return out;
}

ApproxFunction dft(const GroupSpec& g, const ApproxFunction& f) {
  check_size(g, f.size(), "dft");
  const std::size_t m = g.order();
  ApproxFunction out(m, 0.0);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      const double angle = 2.0 * std::numbers::pi * g.pairing(a, x) / static_cast<double>(m);
      out[x] += f[a] * std::polar(1.0, angle);
    }
  }
  return out;
}

}  // namespace jacobi
