#pragma once

#include <cstdint>

#include "mlmkit/poly.hpp"

namespace mlmkit {

// Bottom-up circuit evaluation keeping only multilinear monomials:
// add gates merge child tables, mul gates take the multilinear-filtered
// product. Resource errors carry the offending node id.
MultilinearTable eval_circuit(const Circuit& c, const EvalBudget& budget);

// Clause folding: lifts each clause into table form and folds the
// product with multilinear filtering. Clauses are folded smallest table
// first; the result is fold-order independent. An empty clause
// short-circuits to the zero table, the empty product yields {{}: 1}.
MultilinearTable eval_pisigmapi(const PiSigmaPi& f, const EvalBudget& budget);

// c(F, pi): stored coefficient, 0 when absent.
mpz_class coefficient(const MultilinearTable& t, const VarSet& pi);

// S(F): sum of all stored multilinear coefficients.
mpz_class sum_coefficients(const MultilinearTable& t);

// Independent brute force: enumerate one term per clause across the full
// sum-product expansion on exponent vectors, then delete non-multilinear
// monomials at the very end. `limit` bounds the number of expanded
// monomials (product of clause sizes).
MultilinearTable oracle_expand(const PiSigmaPi& f, std::uint64_t limit = 1000000);

// Cross-validation bridge: a circuit whose sum-product expansion equals
// f's. Coefficients become addition multiplicity, so every coefficient
// must be a positive integer and every term must mention at least one
// variable; an empty clause becomes an empty add gate (the zero
// polynomial). Violations raise ShapeError.
Circuit circuit_from_pisigmapi(const PiSigmaPi& f);

}  // namespace mlmkit
