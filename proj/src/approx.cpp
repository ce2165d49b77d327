#include "mlmkit/approx.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "mlmkit/eval.hpp"

namespace mlmkit {

namespace {

// Every term a distinct single variable with exponent and coefficient 1.
// The matching reduction has no representation for anything else.
void require_unit_pisigma(const PiSigmaPi& f) {
  for (const Clause& c : f.clauses) {
    VarSet seen;
    for (const Term& t : c.terms) {
      if (t.exponents.size() != 1 || t.exponents[0].second != 1)
        throw ShapeError("matching reduction needs a PiSigma polynomial "
                         "(every term one variable of degree 1)");
      if (t.coefficient != 1)
        throw ShapeError("matching reduction needs unit coefficients");
      const int v = t.exponents[0].first;
      if (seen.test(v))
        throw ShapeError("matching reduction: variable repeated within a clause");
      seen.set(v);
    }
  }
}

// Uniform draw from [0, k) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so seeded runs are reproducible everywhere.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (max % k + 1) % k;  // 2^64 mod k
  for (;;) {
    const std::uint64_t x = rng();
    if (rem == 0 || x < max - rem + 1) return x % k;
  }
}

mpz_class factorial(unsigned long k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

}  // namespace

std::optional<BipartiteGraph> reduce_coeff_to_matching(const PiSigmaPi& f,
                                                       const VarSet& pi) {
  f.validate();
  require_unit_pisigma(f);
  if (pi.max_index() >= f.n)
    throw ShapeError("monomial mentions a variable outside the universe");

  const int m = f.clause_count();
  if (pi.count() != m) return std::nullopt;

  // Right vertex j <-> the j-th smallest variable of pi.
  const std::vector<int> pi_vars = pi.members();
  std::vector<int> rank(static_cast<std::size_t>(f.n), -1);
  for (int j = 0; j < m; ++j) rank[static_cast<std::size_t>(pi_vars[j])] = j;

  BipartiteGraph g;
  g.t = m;
  for (int i = 0; i < m; ++i) {
    bool clause_nonempty = false;
    for (const Term& t : f.clauses[static_cast<std::size_t>(i)].terms) {
      const int v = t.exponents[0].first;
      if (!pi.test(v)) continue;  // eliminated variable
      g.add_edge(i, rank[static_cast<std::size_t>(v)]);
      clause_nonempty = true;
    }
    if (!clause_nonempty) return std::nullopt;  // restricted clause is empty
  }
  g.normalize();
  return g;
}

ApproxResult approx_coefficient(const PiSigmaPi& f, const VarSet& pi,
                                const CountBackend& backend) {
  const auto reduced = reduce_coeff_to_matching(f, pi);
  if (!reduced) return ApproxResult{mpq_class(0), true};
  return estimate_matchings(*reduced, backend);
}

ApproxResult sum_via_padding(const PiSigmaPi& f, const CountBackend& backend) {
  f.validate();
  require_unit_pisigma(f);
  const int m = f.clause_count();
  if (m > f.n) return ApproxResult{mpq_class(0), true};  // no multilinear monomials

  PiSigmaPi padded = f;
  Clause full;
  for (int v = 0; v < f.n; ++v) full.terms.push_back(Term::of_vars({v}));
  for (int k = 0; k < f.n - m; ++k) padded.clauses.push_back(full);

  VarSet all;
  for (int v = 0; v < f.n; ++v) all.set(v);
  ApproxResult r = approx_coefficient(padded, all, backend);
  r.value /= mpq_class(factorial(static_cast<unsigned long>(f.n - m)));
  return r;
}

std::optional<ApproxResult> hybrid_coefficient(const PiSigmaPi& f1,
                                               const PiSigmaPi& f2,
                                               const VarSet& pi,
                                               const CountBackend& backend,
                                               const EvalBudget& budget) {
  if (f1.n != f2.n)
    throw ShapeError("hybrid factors must share one variable universe");
  if (pi.max_index() >= f1.n)
    throw ShapeError("monomial mentions a variable outside the universe");
  require_unit_pisigma(f2);

  const MultilinearTable expansion = eval_pisigmapi(f1, budget);
  const int m2 = f2.clause_count();

  bool any_candidate = false;
  bool exact = true;
  mpq_class total = 0;
  for (const auto& [psi, b] : expansion) {
    if (!psi.subset_of(pi)) continue;
    any_candidate = true;
    const VarSet rest = pi.minus(psi);
    if (rest.count() != m2) continue;  // contributes nothing
    const ApproxResult part = approx_coefficient(f2, rest, backend);
    total += mpq_class(b) * part.value;
    exact = exact && part.exact;
  }
  if (!any_candidate) return std::nullopt;
  return ApproxResult{total, exact};
}

ApproxResult estimate_matchings(const BipartiteGraph& g, const CountBackend& backend) {
  if (backend.kind == CountBackend::Kind::exact)
    return ApproxResult{mpq_class(count_perfect_matchings(g, backend.budget)), true};

  if (backend.samples < 1)
    throw ShapeError("monte-carlo backend needs at least one sample");

  const auto adj = g.left_neighbors();
  std::mt19937_64 rng(backend.seed);
  std::vector<char> used(static_cast<std::size_t>(g.t));
  std::vector<int> available;
  mpz_class total = 0;
  for (std::uint64_t s = 0; s < backend.samples; ++s) {
    std::fill(used.begin(), used.end(), 0);
    mpz_class weight = 1;
    for (int i = 0; i < g.t; ++i) {
      available.clear();
      for (int j : adj[static_cast<std::size_t>(i)])
        if (!used[static_cast<std::size_t>(j)]) available.push_back(j);
      if (available.empty()) {
        weight = 0;
        break;
      }
      const std::uint64_t pick = uniform_below(rng, available.size());
      used[static_cast<std::size_t>(available[pick])] = 1;
      weight *= static_cast<unsigned long>(available.size());
    }
    total += weight;
  }
  mpq_class mean(total, mpz_class(static_cast<unsigned long>(backend.samples)));
  mean.canonicalize();
  return ApproxResult{mean, false};
}

}  // namespace mlmkit
