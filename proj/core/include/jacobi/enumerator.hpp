#pragma once

// Exhaustive search for every Jacobi function on a small group, and an
// independent count obtained by pulling back finite-field addition.

#include <cstddef>
#include <vector>

#include "jacobi/jacobi_table.hpp"
#include "jacobi/reconstructor.hpp"
#include "jacobi/verifier.hpp"

namespace jacobi {

struct EnumerationResult {
  GroupSpec group;
  /// Distinct tables passing every axiom exhaustively, sorted by serialized form.
  std::vector<JacobiTable> tables;
  std::size_t count = 0;
  std::size_t oracle_count = 0;
  bool agreement = false;
  /// Number of (c, i) candidates built and verified.
  std::size_t candidates = 0;
};

struct EnumerateOptions {
  std::size_t max_order = 7;
  unsigned threads = 0;
};

/// Searches over the data (c, i): c an involution of the dual group and
/// i : dual \ {c} -> dual \ {1} a bijection with i(x) = x i(x^-1). Each
/// candidate table is verified exhaustively. Throws DomainError if the
/// group order exceeds opts.max_order.
EnumerationResult enumerate_jacobi(const GroupSpec& g, const EnumerateOptions& opts = {});

/// Addition tables on dual(M) + {0} obtained by transporting the addition of
/// GF(m+1) along every group isomorphism dual(M) -> GF(m+1)*; deduplicated
/// and sorted. Empty if m+1 is not a prime power or the groups differ.
std::vector<AdditionTable> oracle_tables(const GroupSpec& g);

std::size_t oracle_count(const GroupSpec& g);

}  // namespace jacobi
