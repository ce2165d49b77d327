#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "mlmkit/poly.hpp"

namespace mlmkit {

// Square matrix of exact integers, row-major.
struct IntMatrix {
  int n = 0;
  std::vector<mpz_class> entries;  // n*n

  explicit IntMatrix(int dim = 0) : n(dim), entries(static_cast<std::size_t>(dim) * dim, 0) {}

  mpz_class& at(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  const mpz_class& at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * n + j];
  }
};

// Balanced bipartite graph with `t` vertices per side. Edges are kept
// sorted and unique.
struct BipartiteGraph {
  int t = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right)

  void add_edge(int left, int right);
  void normalize();
  std::vector<std::vector<int>> left_neighbors() const;  // per left vertex, sorted
};

// Exact permanent through the multilinear-coefficient route: one clause
// per row, sum a_{ij} x_j over nonzero entries, then the coefficient of
// x_1...x_n in the clause-folded product.
mpz_class permanent(const IntMatrix& a, const EvalBudget& budget);

// Independent inclusion-exclusion oracle over column subsets
// (gray-code row-sum updates). Guarded to n <= 30.
mpz_class permanent_ryser(const IntMatrix& a);

// Exact perfect matching count: clause per left vertex over its right
// neighbors, then the coefficient of the all-variables monomial.
mpz_class count_perfect_matchings(const BipartiteGraph& g, const EvalBudget& budget);

// 0/1 biadjacency matrix, entry (i,j)=1 iff edge (i,j).
IntMatrix biadjacency(const BipartiteGraph& g);

}  // namespace mlmkit
