#pragma once

#include <utility>
#include <vector>

#include "mlmkit/counting.hpp"
#include "mlmkit/poly.hpp"

namespace mlmkit {

// Simple undirected graph; edges normalized to (u < v), sorted, unique.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  void add_edge(int u, int v);
  void normalize();
  std::vector<std::vector<int>> adjacency() const;
};

struct Literal {
  int var = 0;
  bool positive = true;
};

// 2SAT formula restricted to the occurrence pattern the gadget needs:
// every variable appears at most three times, and a variable appearing
// three times occurs positively twice and negatively once.
struct Cnf2Sat {
  int var_count = 0;
  std::vector<std::vector<Literal>> clauses;  // 1 or 2 literals each
};

// Circuit for the k-path polynomial: with vertex powers x_i^c, level one
// is x_i^c and level l+1 multiplies x_i^c into the sum of the neighbors'
// level-l polynomials; the output sums level k over all vertices. Shared
// level nodes make this a DAG. For c = 1 the coefficient of the
// multilinear monomial over a k-vertex set counts the directed simple
// paths visiting exactly that set.
Circuit k_path_polynomial(const Graph& g, int k, int c);

// Matching polynomial on 2t variables: x_i for left vertex i, y_j
// (index t+j) for right vertex j; clause i sums x_i*y_j over edges.
// The all-variables coefficient counts perfect matchings.
PiSigmaPi matching_polynomial_xy(const BipartiteGraph& g);

// Half-variable matching encoding on t variables: clause i sums the
// right-side variables adjacent to left vertex i.
PiSigmaPi matching_polynomial_h(const BipartiteGraph& g);

// Row polynomials of a matrix: clause i sums a_{ij} x_j over nonzero
// entries; the all-variables coefficient is the permanent.
PiSigmaPi permanent_polynomial(const IntMatrix& a);

// Independent-set gadget: one variable per edge (lexicographic order),
// then padding variables per vertex so every vertex term has degree
// n-1; the polynomial is n identical clauses summing the vertex terms.
// MAX-SIZE equals (n-1) times the maximum independent set size.
PiSigmaPi independent_set_polynomial(const Graph& g);

// MAX-2SAT gadget: literals are replaced occurrence-wise by pairs of
// fresh variables so that two replacement terms share a variable exactly
// when the underlying literals conflict. K clauses are simultaneously
// satisfiable iff MAX-SIZE is 2K. Rejects formulas outside the
// restricted occurrence pattern.
PiSigmaPi twosat_polynomial(const Cnf2Sat& f);

}  // namespace mlmkit
