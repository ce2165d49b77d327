#include "mlmkit/eval.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace mlmkit {

MultilinearTable eval_circuit(const Circuit& c, const EvalBudget& budget) {
  c.validate();
  const int node_count = static_cast<int>(c.nodes.size());

  // Only evaluate what the output depends on.
  std::vector<bool> reachable(node_count, false);
  {
    std::vector<int> stack{c.output};
    reachable[c.output] = true;
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      for (int child : c.nodes[id].children)
        if (!reachable[child]) {
          reachable[child] = true;
          stack.push_back(child);
        }
    }
  }

  BudgetMeter meter(budget);
  std::vector<std::optional<MultilinearTable>> memo(node_count);
  for (int id = 0; id < node_count; ++id) {
    if (!reachable[id]) continue;
    const CircuitNode& node = c.nodes[id];
    switch (node.kind) {
      case CircuitNode::Kind::input: {
        MultilinearTable t(c.n);
        t.add_term(VarSet::single(node.var), 1);
        memo[id] = std::move(t);
        break;
      }
      case CircuitNode::Kind::add: {
        MultilinearTable t(c.n);
        for (int child : node.children) t = table_add(t, *memo[child]);
        meter.check_entries(t.size(), id);
        memo[id] = std::move(t);
        break;
      }
      case CircuitNode::Kind::mul: {
        memo[id] = table_mul(*memo[node.children[0]], *memo[node.children[1]],
                             &meter, id);
        break;
      }
    }
  }
  return *memo[c.output];
}

MultilinearTable eval_pisigmapi(const PiSigmaPi& f, const EvalBudget& budget) {
  f.validate();
  for (const Clause& c : f.clauses)
    if (c.terms.empty()) return MultilinearTable(f.n);  // zero polynomial

  std::vector<MultilinearTable> factors;
  factors.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) factors.push_back(clause_to_table(c, f.n));
  // Smallest factors first keeps intermediate tables small; the result
  // does not depend on the order.
  std::stable_sort(factors.begin(), factors.end(),
                   [](const MultilinearTable& a, const MultilinearTable& b) {
                     return a.size() < b.size();
                   });

  BudgetMeter meter(budget);
  MultilinearTable acc = MultilinearTable::unit(f.n);
  for (const MultilinearTable& factor : factors) {
    acc = table_mul(acc, factor, &meter);
    if (acc.empty()) break;
  }
  return acc;
}

mpz_class coefficient(const MultilinearTable& t, const VarSet& pi) {
  if (pi.max_index() >= t.var_count())
    throw ShapeError("monomial mentions a variable outside the table's universe");
  return t.coefficient(pi);
}

mpz_class sum_coefficients(const MultilinearTable& t) {
  mpz_class sum = 0;
  for (const auto& [key, coeff] : t) sum += coeff;
  return sum;
}

MultilinearTable oracle_expand(const PiSigmaPi& f, std::uint64_t limit) {
  f.validate();
  std::uint64_t monomials = 1;
  for (const Clause& c : f.clauses) {
    monomials *= c.terms.size();
    if (monomials > limit)
      throw ResourceError("oracle expansion of more than " + std::to_string(limit) +
                          " monomials");
    if (monomials == 0) break;
  }

  // Full expansion keyed by exponent vector; multilinearity is not
  // consulted until the end.
  std::map<std::vector<int>, mpz_class> expansion;
  std::vector<std::size_t> choice(f.clauses.size(), 0);
  const bool any_empty_clause = monomials == 0;
  while (!any_empty_clause) {
    std::vector<int> exps(f.n, 0);
    mpz_class coeff = 1;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      const Term& t = f.clauses[i].terms[choice[i]];
      coeff *= t.coefficient;
      for (const auto& [v, e] : t.exponents) exps[v] += e;
    }
    expansion[std::move(exps)] += coeff;

    // Odometer over one term per clause.
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == f.clauses[pos].terms.size()) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == choice.size()) break;
  }

  MultilinearTable table(f.n);
  for (const auto& [exps, coeff] : expansion) {
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e > 1; })) continue;
    VarSet key;
    for (int v = 0; v < f.n; ++v)
      if (exps[v] == 1) key.set(v);
    table.add_term(key, coeff);
  }
  return table;
}

Circuit circuit_from_pisigmapi(const PiSigmaPi& f) {
  f.validate();
  Circuit c;
  c.n = f.n;

  std::vector<int> input_node(f.n, -1);
  auto input_for = [&](int var) {
    if (input_node[var] < 0) {
      input_node[var] = static_cast<int>(c.nodes.size());
      c.nodes.push_back({CircuitNode::Kind::input, var, {}});
    }
    return input_node[var];
  };
  auto mul_node = [&](int a, int b) {
    c.nodes.push_back({CircuitNode::Kind::mul, -1, {a, b}});
    return static_cast<int>(c.nodes.size()) - 1;
  };

  std::vector<int> clause_nodes;
  clause_nodes.reserve(f.clauses.size());
  for (const Clause& clause : f.clauses) {
    std::vector<int> summands;
    for (const Term& term : clause.terms) {
      if (term.coefficient <= 0)
        throw ShapeError("circuits cannot express nonpositive coefficients");
      if (term.exponents.empty())
        throw ShapeError("circuits cannot express constant terms");
      // Left-deep product of the term's variable powers.
      int node = -1;
      for (const auto& [v, e] : term.exponents)
        for (int k = 0; k < e; ++k) {
          const int leaf = input_for(v);
          node = node < 0 ? leaf : mul_node(node, leaf);
        }
      // Coefficient q becomes q copies of the shared term node.
      if (!term.coefficient.fits_uint_p())
        throw ShapeError("coefficient too large to express as addition multiplicity");
      for (unsigned long k = 0; k < term.coefficient.get_ui(); ++k)
        summands.push_back(node);
    }
    c.nodes.push_back({CircuitNode::Kind::add, -1, std::move(summands)});
    clause_nodes.push_back(static_cast<int>(c.nodes.size()) - 1);
  }

  if (clause_nodes.empty())
    throw ShapeError("circuits cannot express the empty product");
  int out = clause_nodes[0];
  for (std::size_t i = 1; i < clause_nodes.size(); ++i)
    out = mul_node(out, clause_nodes[i]);
  c.output = out;
  return c;
}

}  // namespace mlmkit
