#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mlmkit/poly.hpp"

namespace mlmkit {

// A multilinear monomial assembled by picking pairwise variable-disjoint
// multilinear terms from distinct clauses.
struct SelectedMonomial {
  std::vector<std::pair<int, int>> picks;  // (clause index, term index)
  VarSet vars;
  int length = 0;  // variable count of `vars`
};

// Greedy factor-lambda approximation for polynomials whose term degrees
// are at most lambda: repeatedly take the longest still-compatible
// multilinear term from an unused clause. Ties break to the lowest
// clause index, then the lowest term index. Non-multilinear terms and
// constant terms are never eligible.
SelectedMonomial greedy_max_mlm(const PiSigmaPi& f);

// Exhaustive reference solver: every clause either contributes one
// eligible term or is skipped. `limit` bounds the product of
// (clause size + 1) over all clauses. Among maximum-length selections
// the lexicographically smallest pick sequence is returned.
SelectedMonomial exact_max_mlm(const PiSigmaPi& f, std::uint64_t limit = 1000000);

}  // namespace mlmkit
