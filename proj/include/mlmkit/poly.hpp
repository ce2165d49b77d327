#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mlmkit/errors.hpp"
#include "mlmkit/varset.hpp"

namespace mlmkit {

// One summand inside a clause: a product of variable powers with an
// integer coefficient. Exponents are kept sorted by variable index with
// no zero entries; an empty exponent list is the constant term.
struct Term {
  mpz_class coefficient = 1;
  std::vector<std::pair<int, int>> exponents;  // (variable, exponent>0), sorted

  Term() = default;
  Term(mpz_class coeff, std::vector<std::pair<int, int>> exps)
      : coefficient(std::move(coeff)), exponents(std::move(exps)) {
    normalize();
  }

  // Convenience for multilinear terms: coefficient * product of vars.
  static Term of_vars(std::vector<int> vars, mpz_class coeff = 1);

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : exponents) d += e;
    return d;
  }

  bool is_multilinear() const {
    for (const auto& [v, e] : exponents)
      if (e != 1) return false;
    return true;
  }

  // Monomial length sum(log2(1 + e)); equals the variable count for
  // multilinear terms. The common log n factor is dropped.
  double length() const;

  VarSet vars() const {
    VarSet s;
    for (const auto& [v, e] : exponents) s.set(v);
    return s;
  }

  int max_var() const {  // -1 for the constant term
    return exponents.empty() ? -1 : exponents.back().first;
  }

  // Sort by variable, merge duplicates, drop zero exponents.
  void normalize();

  friend bool operator==(const Term& a, const Term& b) {
    return a.coefficient == b.coefficient && a.exponents == b.exponents;
  }
};

struct Clause {
  std::vector<Term> terms;  // empty clause = zero factor

  int max_var() const {
    int m = -1;
    for (const Term& t : terms) m = std::max(m, t.max_var());
    return m;
  }
};

// Product of clauses over variables x_0..x_{n-1}. The shape (m, s, t) is
// derived from the content.
struct PiSigmaPi {
  int n = 0;
  std::vector<Clause> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
  int max_terms_per_clause() const;
  int max_term_degree() const;

  bool is_pi_sigma() const { return max_term_degree() <= 1; }

  // Throws ShapeError when a term mentions a variable outside the universe.
  void validate() const;
};

// Arithmetic circuit: inputs are variables, + gates have unbounded
// fan-in, x gates have fan-in two. Children precede parents.
struct CircuitNode {
  enum class Kind { input, add, mul };
  Kind kind = Kind::input;
  int var = -1;                // for input
  std::vector<int> children;   // for add (any arity) / mul (exactly 2)
};

struct Circuit {
  int n = 0;
  std::vector<CircuitNode> nodes;
  int output = -1;

  // Throws ShapeError on acyclicity/arity/range violations.
  void validate() const;
};

// Map from variable subsets to the exact coefficients of the
// corresponding multilinear monomials. Canonical: stores no zeros.
class MultilinearTable {
 public:
  using Map = std::unordered_map<VarSet, mpz_class, VarSetHash>;

  explicit MultilinearTable(int n) : n_(n) {}

  static MultilinearTable unit(int n) {
    MultilinearTable t(n);
    t.entries_.emplace(VarSet{}, 1);
    return t;
  }

  int var_count() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Stored coefficient, 0 when the monomial is absent.
  mpz_class coefficient(const VarSet& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? mpz_class(0) : it->second;
  }

  // Accumulate; erases the entry when the sum cancels to zero.
  void add_term(const VarSet& key, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = entries_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) entries_.erase(it);
    }
  }

  // key += a*b without an intermediate temporary.
  void add_product(const VarSet& key, const mpz_class& a, const mpz_class& b) {
    auto [it, inserted] = entries_.try_emplace(key, 0);
    it->second += a * b;
    if (it->second == 0) entries_.erase(it);
  }

  Map::const_iterator begin() const { return entries_.begin(); }
  Map::const_iterator end() const { return entries_.end(); }

  // Entries in cardinality-then-lexicographic key order.
  std::vector<std::pair<VarSet, mpz_class>> sorted_entries() const;

  // True when no stored coefficient is zero (the canonical form).
  bool is_canonical() const {
    for (const auto& [k, c] : entries_)
      if (c == 0) return false;
    return true;
  }

  friend bool operator==(const MultilinearTable& a, const MultilinearTable& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int n_;
  Map entries_;
};

// Entrywise sum; zero sums are removed.
MultilinearTable table_add(const MultilinearTable& a, const MultilinearTable& b);

// Multilinear-filtered product: disjoint key pairs accumulate into their
// union, overlapping pairs contribute nothing. The meter, when given,
// charges |a|*|b| attempted pair multiplications and bounds the result
// size; `node` tags resource errors with the offending circuit node.
MultilinearTable table_mul(const MultilinearTable& a, const MultilinearTable& b,
                           BudgetMeter* meter = nullptr, long long node = -1);

// Lift one clause into table form: one entry per multilinear term, equal
// supports summed, non-multilinear terms dropped.
MultilinearTable clause_to_table(const Clause& c, int n);

}  // namespace mlmkit
