#include "mlmkit/poly.hpp"

#include <algorithm>
#include <cmath>

namespace mlmkit {

Term Term::of_vars(std::vector<int> vars, mpz_class coeff) {
  Term t;
  t.coefficient = std::move(coeff);
  t.exponents.reserve(vars.size());
  for (int v : vars) t.exponents.emplace_back(v, 1);
  t.normalize();
  return t;
}

void Term::normalize() {
  std::sort(exponents.begin(), exponents.end());
  std::vector<std::pair<int, int>> merged;
  merged.reserve(exponents.size());
  for (const auto& [v, e] : exponents) {
    if (!merged.empty() && merged.back().first == v)
      merged.back().second += e;
    else
      merged.emplace_back(v, e);
  }
  std::erase_if(merged, [](const auto& p) { return p.second == 0; });
  exponents = std::move(merged);
}

double Term::length() const {
  double len = 0.0;
  for (const auto& [v, e] : exponents) len += std::log2(1.0 + e);
  return len;
}

int PiSigmaPi::max_terms_per_clause() const {
  std::size_t s = 0;
  for (const Clause& c : clauses) s = std::max(s, c.terms.size());
  return static_cast<int>(s);
}

int PiSigmaPi::max_term_degree() const {
  int t = 0;
  for (const Clause& c : clauses)
    for (const Term& term : c.terms) t = std::max(t, term.degree());
  return t;
}

void PiSigmaPi::validate() const {
  for (const Clause& c : clauses) {
    if (c.max_var() >= n)
      throw ShapeError("polynomial mentions x" + std::to_string(c.max_var() + 1) +
                       " outside its declared universe of " + std::to_string(n) +
                       " variables");
    for (const Term& t : c.terms)
      for (const auto& [v, e] : t.exponents)
        if (v < 0 || e <= 0) throw ShapeError("term with invalid variable or exponent");
  }
}

void Circuit::validate() const {
  if (output < 0 || output >= static_cast<int>(nodes.size()))
    throw ShapeError("circuit output id out of range");
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    const CircuitNode& node = nodes[i];
    switch (node.kind) {
      case CircuitNode::Kind::input:
        if (node.var < 0 || node.var >= n)
          throw ShapeError("input node " + std::to_string(i) +
                           " references variable outside the universe");
        break;
      case CircuitNode::Kind::mul:
        if (node.children.size() != 2)
          throw ShapeError("mul node " + std::to_string(i) + " must have fan-in 2");
        [[fallthrough]];
      case CircuitNode::Kind::add:
        for (int c : node.children)
          if (c < 0 || c >= i)
            throw ShapeError("node " + std::to_string(i) +
                             " references a non-preceding child");
        break;
    }
  }
}

std::vector<std::pair<VarSet, mpz_class>> MultilinearTable::sorted_entries() const {
  std::vector<std::pair<VarSet, mpz_class>> out(entries_.begin(), entries_.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return VarSet::card_lex_less(a.first, b.first);
  });
  return out;
}

MultilinearTable table_add(const MultilinearTable& a, const MultilinearTable& b) {
  if (a.var_count() != b.var_count())
    throw ShapeError("table_add over mismatched variable counts");
  MultilinearTable r = a;
  for (const auto& [key, coeff] : b) r.add_term(key, coeff);
  return r;
}

MultilinearTable table_mul(const MultilinearTable& a, const MultilinearTable& b,
                           BudgetMeter* meter, long long node) {
  if (a.var_count() != b.var_count())
    throw ShapeError("table_mul over mismatched variable counts");
  if (meter)
    meter->charge_pairs(static_cast<std::uint64_t>(a.size()) * b.size(), node);
  const MultilinearTable& outer = a.size() <= b.size() ? a : b;
  const MultilinearTable& inner = a.size() <= b.size() ? b : a;
  MultilinearTable r(a.var_count());
  for (const auto& [ks, cs] : outer) {
    for (const auto& [kt, ct] : inner) {
      if (ks.disjoint_with(kt)) r.add_product(ks.union_with(kt), cs, ct);
    }
    if (meter) meter->check_entries(r.size(), node);
  }
  return r;
}

MultilinearTable clause_to_table(const Clause& c, int n) {
  if (c.max_var() >= n)
    throw ShapeError("clause mentions a variable outside the universe");
  MultilinearTable t(n);
  for (const Term& term : c.terms)
    if (term.is_multilinear()) t.add_term(term.vars(), term.coefficient);
  return t;
}

}  // namespace mlmkit
