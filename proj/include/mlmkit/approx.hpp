#pragma once

#include <cstdint>
#include <optional>

#include "mlmkit/counting.hpp"
#include "mlmkit/poly.hpp"

namespace mlmkit {

// Pluggable matching-count estimator. The exact kind counts perfect
// matchings by clause folding; the monte-carlo kind runs Rasmussen's
// sequential unbiased estimator with a fixed seed (samples drawn
// sequentially from one mt19937_64 stream, so a given seed and sample
// count fully determine the result).
struct CountBackend {
  enum class Kind { exact, monte_carlo };

  Kind kind = Kind::exact;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  EvalBudget budget{};  // used by the exact kind

  static CountBackend exact(EvalBudget b = EvalBudget::desk_default()) {
    CountBackend c;
    c.kind = Kind::exact;
    c.budget = b;
    return c;
  }
  static CountBackend monte_carlo(std::uint64_t samples, std::uint64_t seed) {
    CountBackend c;
    c.kind = Kind::monte_carlo;
    c.samples = samples;
    c.seed = seed;
    return c;
  }
};

struct ApproxResult {
  mpq_class value;
  bool exact = false;  // whether the backing computation was exact
};

// Restrict every clause of a PiSigma polynomial to the variables of pi
// and turn the incidence between clauses and pi's variables into a
// bipartite graph whose perfect matchings are counted by c(f, pi).
// Returns nullopt when the coefficient is definitely zero: |pi| differs
// from the clause count, or some restricted clause is empty.
// Requires the unit-coefficient PiSigma form (each term a distinct
// single variable with coefficient 1); anything else is a ShapeError.
std::optional<BipartiteGraph> reduce_coeff_to_matching(const PiSigmaPi& f,
                                                       const VarSet& pi);

// Coefficient of pi in a PiSigma polynomial through the matching
// reduction and the given backend. Definitely-zero cases return exact 0.
ApproxResult approx_coefficient(const PiSigmaPi& f, const VarSet& pi,
                                const CountBackend& backend);

// S(f) for a PiSigma polynomial: pad with n-m copies of the full clause
// x_1+...+x_n, estimate the coefficient of x_1...x_n, divide by (n-m)!.
// m > n yields exact 0.
ApproxResult sum_via_padding(const PiSigmaPi& f, const CountBackend& backend);

// Coefficient of pi in f1*f2 where f1 is a small PiSigmaPi (expanded
// under `budget`) and f2 is a unit-coefficient PiSigma: accumulates
// b_psi * estimate(c(f2, pi \ psi)) over the multilinear expansion
// entries psi of f1 contained in pi. Returns nullopt ("no") when no
// such psi exists.
std::optional<ApproxResult> hybrid_coefficient(const PiSigmaPi& f1,
                                               const PiSigmaPi& f2,
                                               const VarSet& pi,
                                               const CountBackend& backend,
                                               const EvalBudget& budget);

// The backend entry point itself: exact count or seeded Monte-Carlo
// estimate of the number of perfect matchings.
ApproxResult estimate_matchings(const BipartiteGraph& g, const CountBackend& backend);

}  // namespace mlmkit
