#include "mlmkit/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace mlmkit {

void Graph::add_edge(int u, int v) {
  if (u == v) throw ShapeError("self-loops are not allowed");
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw ShapeError("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges.emplace_back(u, v);
}

void Graph::normalize() {
  for (auto& [u, v] : edges) {
    if (u == v) throw ShapeError("self-loops are not allowed");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ShapeError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Circuit k_path_polynomial(const Graph& g, int k, int c) {
  if (k < 1) throw ShapeError("path length k must be at least 1");
  if (c < 1) throw ShapeError("vertex exponent c must be at least 1");
  Graph norm = g;
  norm.normalize();
  const auto adj = norm.adjacency();

  Circuit circ;
  circ.n = g.n;
  auto add_node = [&](CircuitNode node) {
    circ.nodes.push_back(std::move(node));
    return static_cast<int>(circ.nodes.size()) - 1;
  };

  // x_i^c, shared across levels.
  std::vector<int> power(static_cast<std::size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v) {
    const int input = add_node({CircuitNode::Kind::input, v, {}});
    int node = input;
    for (int e = 1; e < c; ++e)
      node = add_node({CircuitNode::Kind::mul, -1, {node, input}});
    power[static_cast<std::size_t>(v)] = node;
  }

  // level[v] = node for p_{l, v}; level l >= 2 exists for non-isolated
  // vertices only (an isolated vertex has the empty neighbor sum).
  std::vector<int> level = power;
  for (int l = 2; l <= k; ++l) {
    std::vector<int> next(static_cast<std::size_t>(g.n), -1);
    for (int v = 0; v < g.n; ++v) {
      if (adj[static_cast<std::size_t>(v)].empty()) continue;
      std::vector<int> children;
      for (int u : adj[static_cast<std::size_t>(v)]) {
        const int child = level[static_cast<std::size_t>(u)];
        if (child >= 0) children.push_back(child);
      }
      if (children.empty()) continue;
      const int sum = add_node({CircuitNode::Kind::add, -1, std::move(children)});
      next[static_cast<std::size_t>(v)] =
          add_node({CircuitNode::Kind::mul, -1,
                    {power[static_cast<std::size_t>(v)], sum}});
    }
    level = std::move(next);
  }

  std::vector<int> tops;
  for (int v = 0; v < g.n; ++v)
    if (level[static_cast<std::size_t>(v)] >= 0)
      tops.push_back(level[static_cast<std::size_t>(v)]);
  circ.output = add_node({CircuitNode::Kind::add, -1, std::move(tops)});
  return circ;
}

PiSigmaPi matching_polynomial_xy(const BipartiteGraph& g) {
  PiSigmaPi f;
  f.n = 2 * g.t;
  f.clauses.resize(static_cast<std::size_t>(g.t));
  const auto adj = g.left_neighbors();
  for (int i = 0; i < g.t; ++i)
    for (int j : adj[static_cast<std::size_t>(i)])
      f.clauses[static_cast<std::size_t>(i)].terms.push_back(
          Term::of_vars({i, g.t + j}));
  return f;
}

PiSigmaPi matching_polynomial_h(const BipartiteGraph& g) {
  PiSigmaPi f;
  f.n = g.t;
  f.clauses.resize(static_cast<std::size_t>(g.t));
  const auto adj = g.left_neighbors();
  for (int i = 0; i < g.t; ++i)
    for (int j : adj[static_cast<std::size_t>(i)])
      f.clauses[static_cast<std::size_t>(i)].terms.push_back(Term::of_vars({j}));
  return f;
}

PiSigmaPi permanent_polynomial(const IntMatrix& a) {
  PiSigmaPi f;
  f.n = a.n;
  f.clauses.resize(static_cast<std::size_t>(a.n));
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j)
      if (a.at(i, j) != 0)
        f.clauses[static_cast<std::size_t>(i)].terms.push_back(
            Term(a.at(i, j), {{j, 1}}));
  return f;
}

PiSigmaPi independent_set_polynomial(const Graph& g) {
  Graph norm = g;
  norm.normalize();
  const int n = norm.n;
  const int edge_count = static_cast<int>(norm.edges.size());

  // Edge variables first, in lexicographic edge order; padding variables
  // follow, grouped by vertex.
  std::vector<std::vector<int>> edge_vars_at(static_cast<std::size_t>(n));
  for (int e = 0; e < edge_count; ++e) {
    edge_vars_at[static_cast<std::size_t>(norm.edges[e].first)].push_back(e);
    edge_vars_at[static_cast<std::size_t>(norm.edges[e].second)].push_back(e);
  }

  int next_var = edge_count;
  Clause sum;
  for (int v = 0; v < n; ++v) {
    std::vector<int> vars = edge_vars_at[static_cast<std::size_t>(v)];
    const int degree = static_cast<int>(vars.size());
    for (int p = 0; p < n - 1 - degree; ++p) vars.push_back(next_var++);
    sum.terms.push_back(Term::of_vars(std::move(vars)));
  }

  PiSigmaPi f;
  f.n = next_var;
  f.clauses.assign(static_cast<std::size_t>(n), sum);
  return f;
}

namespace {

struct Occurrence {
  int clause;
  int slot;
  bool positive;
};

}  // namespace

PiSigmaPi twosat_polynomial(const Cnf2Sat& f) {
  std::vector<std::vector<Occurrence>> occs(static_cast<std::size_t>(f.var_count));
  for (int ci = 0; ci < static_cast<int>(f.clauses.size()); ++ci) {
    const auto& clause = f.clauses[static_cast<std::size_t>(ci)];
    if (clause.empty() || clause.size() > 2)
      throw ShapeError("2SAT clauses must have one or two literals");
    for (int slot = 0; slot < static_cast<int>(clause.size()); ++slot) {
      const Literal& lit = clause[static_cast<std::size_t>(slot)];
      if (lit.var < 0 || lit.var >= f.var_count)
        throw ShapeError("literal variable out of range");
      occs[static_cast<std::size_t>(lit.var)].push_back({ci, slot, lit.positive});
    }
  }

  // Verify the restricted occurrence pattern and allot fresh variables:
  // y1..y4 per variable as needed, grouped by variable index.
  std::vector<int> base(static_cast<std::size_t>(f.var_count), -1);
  int next_var = 0;
  for (int v = 0; v < f.var_count; ++v) {
    const auto& list = occs[static_cast<std::size_t>(v)];
    int pos = 0;
    for (const Occurrence& o : list) pos += o.positive ? 1 : 0;
    const int neg = static_cast<int>(list.size()) - pos;
    if (list.size() > 3)
      throw ShapeError("variable " + std::to_string(v + 1) +
                       " appears more than three times");
    if (list.size() == 3 && !(pos == 2 && neg == 1))
      throw ShapeError("variable " + std::to_string(v + 1) +
                       " appears three times but not as two positive and "
                       "one negative occurrence");
    base[static_cast<std::size_t>(v)] = next_var;
    if (list.size() == 1) next_var += 2;
    else if (list.size() == 2) next_var += (pos == 1 ? 2 : 4);  // mixed pair shares
    else if (list.size() == 3) next_var += 4;
  }

  // Replacement pairs, per occurrence in clause order.
  PiSigmaPi g;
  g.n = next_var;
  g.clauses.resize(f.clauses.size());
  for (int v = 0; v < f.var_count; ++v) {
    const auto& list = occs[static_cast<std::size_t>(v)];
    const int y = base[static_cast<std::size_t>(v)];
    int pos_seen = 0;
    for (const Occurrence& o : list) {
      std::array<int, 2> pair{};
      if (list.size() == 1) {
        pair = {y + 0, y + 1};
      } else if (list.size() == 2) {
        int pos = 0;
        for (const Occurrence& p : list) pos += p.positive ? 1 : 0;
        if (pos == 1) {
          pair = {y + 0, y + 1};  // opposite polarities share one pair
        } else {
          pair = (&o == &list[0]) ? std::array<int, 2>{y + 0, y + 1}
                                  : std::array<int, 2>{y + 2, y + 3};
        }
      } else {  // two positive, one negative
        if (o.positive) {
          pair = (pos_seen == 0) ? std::array<int, 2>{y + 0, y + 1}
                                 : std::array<int, 2>{y + 2, y + 3};
          ++pos_seen;
        } else {
          pair = {y + 0, y + 2};
        }
      }
      auto& terms = g.clauses[static_cast<std::size_t>(o.clause)].terms;
      if (static_cast<int>(terms.size()) <= o.slot)
        terms.resize(static_cast<std::size_t>(o.slot) + 1);
      terms[static_cast<std::size_t>(o.slot)] = Term::of_vars({pair[0], pair[1]});
    }
  }
  return g;
}

}  // namespace mlmkit
