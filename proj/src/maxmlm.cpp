#include "mlmkit/maxmlm.hpp"

#include <algorithm>
#include <limits>

namespace mlmkit {

namespace {

struct EligibleTerm {
  int term_index;
  VarSet vars;
  int degree;

  friend bool operator==(const EligibleTerm& a, const EligibleTerm& b) {
    return a.term_index == b.term_index && a.vars == b.vars;
  }
};

// Terms that can appear in a multilinear monomial: multilinear and
// mentioning at least one variable.
std::vector<std::vector<EligibleTerm>> eligible_terms(const PiSigmaPi& f) {
  std::vector<std::vector<EligibleTerm>> out(f.clauses.size());
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    const Clause& c = f.clauses[ci];
    for (std::size_t ti = 0; ti < c.terms.size(); ++ti) {
      const Term& t = c.terms[ti];
      if (!t.is_multilinear() || t.exponents.empty()) continue;
      out[ci].push_back({static_cast<int>(ti), t.vars(), t.degree()});
    }
  }
  return out;
}

struct ExactSearch {
  const std::vector<std::vector<EligibleTerm>>& clauses;
  std::vector<int> suffix_best;     // max achievable length from clause i on
  std::vector<bool> same_as_prev;   // clause i interchangeable with clause i-1
  SelectedMonomial best;
  std::vector<std::pair<int, int>> picks;

  // `min_term` is the least admissible term index for clause i inside a
  // run of identical clauses (INT_MAX after a skip); runs only ever need
  // one canonical arrangement of any selection, so everything else is
  // pruned.
  void dfs(std::size_t i, VarSet current, int length, int min_term) {
    if (length > best.length) {
      best.length = length;
      best.vars = current;
      best.picks = picks;
    }
    if (i == clauses.size()) return;
    if (length + suffix_best[i] <= best.length) return;  // cannot beat best

    const int floor_index = same_as_prev[i] ? min_term : 0;
    for (const EligibleTerm& t : clauses[i]) {
      if (t.term_index < floor_index) continue;
      if (!t.vars.disjoint_with(current)) continue;
      picks.emplace_back(static_cast<int>(i), t.term_index);
      dfs(i + 1, current.union_with(t.vars), length + t.degree, t.term_index + 1);
      picks.pop_back();
    }
    // Skipping an identical clause forbids picks later in the run.
    const bool next_same = i + 1 < clauses.size() && same_as_prev[i + 1];
    dfs(i + 1, current, length,
        next_same ? std::numeric_limits<int>::max() : 0);
  }
};

}  // namespace

SelectedMonomial greedy_max_mlm(const PiSigmaPi& f) {
  f.validate();
  const auto clauses = eligible_terms(f);
  std::vector<bool> marked(clauses.size(), false);

  SelectedMonomial sel;
  for (;;) {
    int best_clause = -1, best_term = -1, best_degree = 0;
    VarSet best_vars;
    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
      if (marked[ci]) continue;
      for (const EligibleTerm& t : clauses[ci]) {
        if (t.degree <= best_degree) continue;  // strict: ties keep the earliest
        if (!t.vars.disjoint_with(sel.vars)) continue;
        best_clause = static_cast<int>(ci);
        best_term = t.term_index;
        best_degree = t.degree;
        best_vars = t.vars;
      }
    }
    if (best_clause < 0) break;
    marked[static_cast<std::size_t>(best_clause)] = true;
    sel.vars = sel.vars.union_with(best_vars);
    sel.picks.emplace_back(best_clause, best_term);
    sel.length += best_degree;
  }
  return sel;
}

SelectedMonomial exact_max_mlm(const PiSigmaPi& f, std::uint64_t limit) {
  f.validate();
  std::uint64_t leaves = 1;
  for (const Clause& c : f.clauses) {
    leaves *= c.terms.size() + 1;
    if (leaves > limit)
      throw ResourceError("exact search beyond " + std::to_string(limit) +
                          " leaves");
  }

  const auto clauses = eligible_terms(f);
  ExactSearch search{clauses, {}, {}, {}, {}};
  search.suffix_best.assign(clauses.size() + 1, 0);
  for (std::size_t i = clauses.size(); i-- > 0;) {
    int longest = 0;
    for (const EligibleTerm& t : clauses[i]) longest = std::max(longest, t.degree);
    search.suffix_best[i] = search.suffix_best[i + 1] + longest;
  }
  search.same_as_prev.assign(clauses.size(), false);
  for (std::size_t i = 1; i < clauses.size(); ++i)
    search.same_as_prev[i] = clauses[i] == clauses[i - 1];

  search.best.length = -1;  // so the empty selection is recorded
  search.dfs(0, VarSet{}, 0, 0);
  return search.best;
}

}  // namespace mlmkit
