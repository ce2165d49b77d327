#pragma once

#include <string>
#include <string_view>

#include "mlmkit/counting.hpp"
#include "mlmkit/generators.hpp"
#include "mlmkit/poly.hpp"

namespace mlmkit {

// Polynomial text: optional leading "vars <n>" header, then clauses
//   polynomial := clause ('*' clause)*
//   clause     := '(' term ('+' term)* ')' | '(' ')'
//   term       := [int '*']? factor ('*' factor)* | int
//   factor     := 'x' index ['^' exp]
// Whitespace is ignored, indices are 1-based in text. Without a header
// the variable count is the largest index mentioned. Syntax errors
// report line and column; index 0 or exponent 0 are validation errors.
PiSigmaPi parse_poly(std::string_view text);

// Circuit text: optional "vars <n>" header, node lines
//   <id> var x<k>
//   <id> add <id>...
//   <id> mul <id> <id>
// and a final "out <id>". Nodes must be defined before use.
Circuit parse_circuit(std::string_view text);

// "graph <n>" header, then "e u v" lines, 1-based.
Graph parse_graph(std::string_view text);

// "bigraph <t>" header, then "e i j" lines (left i, right j), 1-based.
BipartiteGraph parse_bigraph(std::string_view text);

// One row per line, comma-separated signed integers, square.
IntMatrix parse_matrix_csv(std::string_view text);

// "cnf <v>" header, then one clause per line: one or two nonzero
// signed literals, e.g. "1 -2".
Cnf2Sat parse_cnf2(std::string_view text);

// Multilinear monomial "x1*x3*...": distinct 1-based indices.
VarSet parse_monomial(std::string_view text, int n);

std::string print_poly(const PiSigmaPi& f);
std::string print_circuit(const Circuit& c);

// "x1,x2" (ascending); "-" for the empty monomial.
std::string print_varset(const VarSet& s);

// One line per entry, "<vars> <coefficient>", sorted by key cardinality
// then lexicographic variable list.
std::string print_table(const MultilinearTable& t);

}  // namespace mlmkit
