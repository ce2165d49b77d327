#include "mlmkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace mlmkit {

namespace {

[[noreturn]] void syntax_error(int line, int col, const std::string& what) {
  throw ValidationError("syntax error at line " + std::to_string(line) +
                        ", column " + std::to_string(col) + ": " + what);
}

// Character cursor with line/column tracking for the polynomial grammar.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(std::string("expected ") + what);
  }

  // Signed decimal integer (minus sign attached, '+' is a separator).
  bool try_integer(mpz_class& out) {
    skip_ws();
    std::size_t p = pos_;
    if (p < text_.size() && text_[p] == '-') ++p;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p])))
      return false;
    const std::size_t start = pos_;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    out = mpz_class(std::string(text_.substr(start, p - start)), 10);
    while (pos_ < p) advance();
    return true;
  }

  long integer(const char* what) {
    mpz_class v;
    if (!try_integer(v)) fail(std::string("expected ") + what);
    if (!v.fits_slong_p()) fail(std::string(what) + " out of range");
    return v.get_si();
  }

  // Accepts "word" at the cursor, keyword-style.
  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    for (std::size_t i = 0; i < word.size(); ++i) advance();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) { syntax_error(line_, col_, what); }

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// x<index>['^'<exp>]; returns (0-based variable, exponent).
std::pair<int, int> parse_factor(Cursor& cur) {
  cur.expect('x', "a factor 'x<index>'");
  const long index = cur.integer("variable index");
  if (index < 1) throw ValidationError("variable indices are 1-based; got x" +
                                       std::to_string(index));
  int exp = 1;
  if (cur.consume('^')) {
    const long e = cur.integer("exponent");
    if (e < 1) throw ValidationError("exponents must be positive; got ^" +
                                     std::to_string(e));
    exp = static_cast<int>(e);
  }
  return {static_cast<int>(index) - 1, exp};
}

Term parse_term(Cursor& cur) {
  Term t;
  mpz_class coeff;
  bool have_factor = false;
  if (cur.try_integer(coeff)) {
    t.coefficient = coeff;
    if (!cur.consume('*')) {
      t.normalize();
      return t;  // constant term
    }
  }
  for (;;) {
    const auto [v, e] = parse_factor(cur);
    t.exponents.emplace_back(v, e);
    have_factor = true;
    if (!cur.consume('*')) break;
  }
  if (!have_factor) cur.fail("expected a term");
  t.normalize();
  return t;
}

Clause parse_clause(Cursor& cur) {
  cur.expect('(', "'('");
  Clause c;
  if (cur.consume(')')) return c;  // the zero factor
  for (;;) {
    c.terms.push_back(parse_term(cur));
    if (cur.consume(')')) break;
    cur.expect('+', "'+' or ')'");
  }
  return c;
}

// Optional "vars <n>" header; -1 when absent.
int parse_vars_header(Cursor& cur) {
  if (!cur.consume_word("vars")) return -1;
  const long n = cur.integer("variable count");
  if (n < 0) throw ValidationError("negative variable count");
  return static_cast<int>(n);
}

int universe_size(int declared, int max_var, const char* what) {
  if (declared < 0) return max_var + 1;
  if (max_var >= declared)
    throw ValidationError(std::string(what) + " mentions x" +
                          std::to_string(max_var + 1) + " beyond the declared " +
                          std::to_string(declared) + " variables");
  return declared;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long to_long(const std::string& tok, int line_no, const char* what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("line " + std::to_string(line_no) + ": expected " +
                          what + ", got '" + tok + "'");
  }
}

}  // namespace

PiSigmaPi parse_poly(std::string_view text) {
  Cursor cur(text);
  PiSigmaPi f;
  const int declared = parse_vars_header(cur);
  if (!cur.at_end()) {
    for (;;) {
      f.clauses.push_back(parse_clause(cur));
      if (!cur.consume('*')) break;
    }
    if (!cur.at_end()) cur.fail("unexpected trailing input");
  }
  int max_var = -1;
  for (const Clause& c : f.clauses) max_var = std::max(max_var, c.max_var());
  f.n = universe_size(declared, max_var, "polynomial");
  return f;
}

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::vector<std::string> names;
  auto id_of = [&](const std::string& name, int line_no) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown node '" + name + "' (forward references "
                            "are not allowed)");
    return static_cast<int>(it - names.begin());
  };

  int declared = -1;
  bool have_out = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (have_out)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": content after the out line");
    if (toks[0] == "vars") {
      if (toks.size() != 2 || !names.empty() || declared >= 0)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": misplaced vars header");
      declared = static_cast<int>(to_long(toks[1], line_no, "a variable count"));
      continue;
    }
    if (toks[0] == "out") {
      if (toks.size() != 2)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": out takes exactly one node");
      c.output = id_of(toks[1], line_no);
      have_out = true;
      continue;
    }
    if (toks.size() < 2)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected '<id> var|add|mul ...'");
    const std::string& name = toks[0];
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate node '" + name + "'");
    CircuitNode node;
    if (toks[1] == "var") {
      if (toks.size() != 3 || toks[2].size() < 2 || toks[2][0] != 'x')
        throw ValidationError("line " + std::to_string(line_no) +
                              ": var expects one operand 'x<k>'");
      const long k = to_long(toks[2].substr(1), line_no, "a variable index");
      if (k < 1)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": variable indices are 1-based");
      node.kind = CircuitNode::Kind::input;
      node.var = static_cast<int>(k) - 1;
    } else if (toks[1] == "add") {
      node.kind = CircuitNode::Kind::add;
      for (std::size_t i = 2; i < toks.size(); ++i)
        node.children.push_back(id_of(toks[i], line_no));
    } else if (toks[1] == "mul") {
      if (toks.size() != 4)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": mul expects exactly two operands");
      node.kind = CircuitNode::Kind::mul;
      node.children = {id_of(toks[2], line_no), id_of(toks[3], line_no)};
    } else {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown node kind '" + toks[1] + "'");
    }
    names.push_back(name);
    c.nodes.push_back(std::move(node));
  }
  if (!have_out) throw ValidationError("circuit text is missing the out line");

  int max_var = -1;
  for (const CircuitNode& node : c.nodes)
    if (node.kind == CircuitNode::Kind::input) max_var = std::max(max_var, node.var);
  c.n = universe_size(declared, max_var, "circuit");
  c.validate();
  return c;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Graph g;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "graph")
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected header 'graph <n>'");
      g.n = static_cast<int>(to_long(toks[1], line_no, "a vertex count"));
      if (g.n < 0) throw ValidationError("negative vertex count");
      have_header = true;
      continue;
    }
    if (toks.size() != 3 || toks[0] != "e")
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected an edge line 'e u v'");
    const long u = to_long(toks[1], line_no, "a vertex");
    const long v = to_long(toks[2], line_no, "a vertex");
    if (u < 1 || v < 1 || u > g.n || v > g.n)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": vertex out of range");
    if (u == v)
      throw ValidationError("line " + std::to_string(line_no) + ": self-loop");
    g.add_edge(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
  }
  if (!have_header) throw ValidationError("missing 'graph <n>' header");
  g.normalize();
  return g;
}

BipartiteGraph parse_bigraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  BipartiteGraph g;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "bigraph")
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected header 'bigraph <t>'");
      g.t = static_cast<int>(to_long(toks[1], line_no, "a side size"));
      if (g.t < 0) throw ValidationError("negative side size");
      have_header = true;
      continue;
    }
    if (toks.size() != 3 || toks[0] != "e")
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected an edge line 'e i j'");
    const long i = to_long(toks[1], line_no, "a left vertex");
    const long j = to_long(toks[2], line_no, "a right vertex");
    if (i < 1 || j < 1 || i > g.t || j > g.t)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": vertex out of range");
    g.add_edge(static_cast<int>(i) - 1, static_cast<int>(j) - 1);
  }
  if (!have_header) throw ValidationError("missing 'bigraph <t>' header");
  g.normalize();
  return g;
}

IntMatrix parse_matrix_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<mpz_class>> rows;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (split_tokens(line).empty()) continue;
    std::vector<mpz_class> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto first = cell.find_first_not_of(" \t\r");
      const auto last = cell.find_last_not_of(" \t\r");
      if (first == std::string::npos)
        throw ValidationError("line " + std::to_string(line_no) + ": empty cell");
      try {
        row.emplace_back(cell.substr(first, last - first + 1), 10);
      } catch (const std::invalid_argument&) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected an integer, got '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  IntMatrix a(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw ValidationError("matrix is not square: row " + std::to_string(i + 1) +
                            " has " + std::to_string(rows[i].size()) + " of " +
                            std::to_string(rows.size()) + " entries");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      a.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  }
  return a;
}

Cnf2Sat parse_cnf2(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf2Sat f;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto toks = split_tokens(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "cnf")
        throw ValidationError("line " + std::to_string(line_no) +
                              ": expected header 'cnf <variables>'");
      f.var_count = static_cast<int>(to_long(toks[1], line_no, "a variable count"));
      if (f.var_count < 0) throw ValidationError("negative variable count");
      have_header = true;
      continue;
    }
    if (toks.size() < 1 || toks.size() > 2)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": a 2SAT clause has one or two literals");
    std::vector<Literal> clause;
    for (const std::string& tok : toks) {
      const long lit = to_long(tok, line_no, "a literal");
      if (lit == 0 || std::abs(lit) > f.var_count)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": literal out of range");
      clause.push_back({static_cast<int>(std::abs(lit)) - 1, lit > 0});
    }
    f.clauses.push_back(std::move(clause));
  }
  if (!have_header) throw ValidationError("missing 'cnf <variables>' header");
  return f;
}

VarSet parse_monomial(std::string_view text, int n) {
  Cursor cur(text);
  VarSet s;
  for (;;) {
    const auto [v, e] = parse_factor(cur);
    if (e != 1 || s.test(v))
      throw ValidationError("monomial must be multilinear: x" +
                            std::to_string(v + 1) + " repeats");
    if (v >= n)
      throw ValidationError("monomial mentions x" + std::to_string(v + 1) +
                            " beyond the instance's " + std::to_string(n) +
                            " variables");
    s.set(v);
    if (!cur.consume('*')) break;
  }
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return s;
}

namespace {

void print_term(std::ostringstream& out, const Term& t) {
  if (t.exponents.empty()) {
    out << t.coefficient.get_str();
    return;
  }
  bool first = true;
  if (t.coefficient != 1) {
    out << t.coefficient.get_str();
    first = false;
  }
  for (const auto& [v, e] : t.exponents) {
    if (!first) out << '*';
    out << 'x' << (v + 1);
    if (e > 1) out << '^' << e;
    first = false;
  }
}

}  // namespace

std::string print_poly(const PiSigmaPi& f) {
  std::ostringstream out;
  out << "vars " << f.n << '\n';
  for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
    if (ci) out << '*';
    out << '(';
    for (std::size_t ti = 0; ti < f.clauses[ci].terms.size(); ++ti) {
      if (ti) out << '+';
      print_term(out, f.clauses[ci].terms[ti]);
    }
    out << ')';
  }
  if (!f.clauses.empty()) out << '\n';
  return out.str();
}

std::string print_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "vars " << c.n << '\n';
  for (std::size_t i = 0; i < c.nodes.size(); ++i) {
    const CircuitNode& node = c.nodes[i];
    out << 'n' << i;
    switch (node.kind) {
      case CircuitNode::Kind::input:
        out << " var x" << (node.var + 1);
        break;
      case CircuitNode::Kind::add:
        out << " add";
        for (int child : node.children) out << " n" << child;
        break;
      case CircuitNode::Kind::mul:
        out << " mul n" << node.children[0] << " n" << node.children[1];
        break;
    }
    out << '\n';
  }
  out << "out n" << c.output << '\n';
  return out.str();
}

std::string print_varset(const VarSet& s) {
  if (s.empty()) return "-";
  std::ostringstream out;
  bool first = true;
  for (int v : s.members()) {
    if (!first) out << ',';
    out << 'x' << (v + 1);
    first = false;
  }
  return out.str();
}

std::string print_table(const MultilinearTable& t) {
  std::ostringstream out;
  for (const auto& [key, coeff] : t.sorted_entries())
    out << print_varset(key) << ' ' << coeff.get_str() << '\n';
  return out.str();
}

}  // namespace mlmkit
