#include "mlmkit/counting.hpp"

#include <algorithm>
#include <bit>

#include "mlmkit/eval.hpp"

namespace mlmkit {

void BipartiteGraph::add_edge(int left, int right) {
  if (left < 0 || left >= t || right < 0 || right >= t)
    throw ShapeError("bipartite edge index out of range");
  edges.emplace_back(left, right);
}

void BipartiteGraph::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<int>> BipartiteGraph::left_neighbors() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(t));
  for (const auto& [l, r] : edges) {
    if (l < 0 || l >= t || r < 0 || r >= t)
      throw ShapeError("bipartite edge index out of range");
    adj[static_cast<std::size_t>(l)].push_back(r);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return adj;
}

static VarSet full_set(int n) {
  VarSet s;
  for (int i = 0; i < n; ++i) s.set(i);
  return s;
}

mpz_class permanent(const IntMatrix& a, const EvalBudget& budget) {
  PiSigmaPi f;
  f.n = a.n;
  f.clauses.resize(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) != 0)
        f.clauses[static_cast<std::size_t>(i)].terms.push_back(
            Term(a.at(i, j), {{j, 1}}));
  return coefficient(eval_pisigmapi(f, budget), full_set(a.n));
}

mpz_class permanent_ryser(const IntMatrix& a) {
  if (a.n > 30)
    throw ResourceError("ryser permanent guarded to n <= 30, got n = " +
                        std::to_string(a.n));
  if (a.n == 0) return 1;
  const int n = a.n;

  // sum over nonempty column subsets S of (-1)^(n-|S|) prod_i rowsum_S(i),
  // with gray-code single-column updates of the row sums.
  std::vector<mpz_class> rowsum(static_cast<std::size_t>(n), 0);
  std::uint64_t gray = 0;
  mpz_class total = 0, prod;
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    const std::uint64_t next_gray = k ^ (k >> 1);
    const int j = std::countr_zero(gray ^ next_gray);
    if (next_gray & (std::uint64_t{1} << j))
      for (int i = 0; i < n; ++i) rowsum[static_cast<std::size_t>(i)] += a.at(i, j);
    else
      for (int i = 0; i < n; ++i) rowsum[static_cast<std::size_t>(i)] -= a.at(i, j);
    gray = next_gray;

    prod = 1;
    for (int i = 0; i < n && prod != 0; ++i) prod *= rowsum[static_cast<std::size_t>(i)];
    if ((n - std::popcount(gray)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

mpz_class count_perfect_matchings(const BipartiteGraph& g, const EvalBudget& budget) {
  PiSigmaPi f;
  f.n = g.t;
  f.clauses.resize(static_cast<std::size_t>(g.t));
  const auto adj = g.left_neighbors();
  for (int i = 0; i < g.t; ++i)
    for (int j : adj[static_cast<std::size_t>(i)])
      f.clauses[static_cast<std::size_t>(i)].terms.push_back(Term::of_vars({j}));
  return coefficient(eval_pisigmapi(f, budget), full_set(g.t));
}

IntMatrix biadjacency(const BipartiteGraph& g) {
  IntMatrix a(g.t);
  for (const auto& [l, r] : g.edges) {
    if (l < 0 || l >= g.t || r < 0 || r >= g.t)
      throw ShapeError("bipartite edge index out of range");
    a.at(l, r) = 1;
  }
  return a;
}

}  // namespace mlmkit
