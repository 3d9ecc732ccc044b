#include "penalty/encoders.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "penalty/error.hpp"

namespace penalty {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : vertices_(std::move(vertices)) {
  std::vector<std::string> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate vertex name");
  }
  for (const auto& v : vertices_) {
    if (!is_valid_atom_name(v)) throw std::invalid_argument("invalid vertex name '" + v + "'");
  }
  adjacency_.assign(vertices_.size(), std::vector<bool>(vertices_.size(), false));
  for (const auto& [a, b] : edges) {
    const auto u = index_of(a);
    const auto v = index_of(b);
    if (u == v) throw std::invalid_argument("self-loop on vertex '" + a + "'");
    if (adjacency_[u][v]) throw std::invalid_argument("repeated edge " + a + " " + b);
    adjacency_[u][v] = adjacency_[v][u] = true;
    ++edge_count_;
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return adjacency_.at(u).at(v); }

bool Graph::adjacent(std::string_view u, std::string_view v) const {
  return adjacent(index_of(u), index_of(v));
}

std::size_t Graph::index_of(std::string_view name) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), name);
  if (it == vertices_.end()) throw std::invalid_argument("unknown vertex '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

PenaltyKB encode_max_clique(const Graph& g) {
  std::vector<std::pair<Formula, Penalty>> items;
  const auto& vs = g.vertices();
  for (const auto& v : vs) items.emplace_back(Formula::atom(v), Penalty(1));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(i, j)) continue;
      items.emplace_back(Formula::disjunction(Formula::negation(Formula::atom(vs[i])),
                                              Formula::negation(Formula::atom(vs[j]))),
                         Penalty::infinite());
    }
  }
  return PenaltyKB(std::move(items));
}

std::vector<std::string> decode_clique(const Graph& g, const Interpretation& w) {
  std::vector<std::string> out;
  for (const auto& v : g.vertices()) {
    if (w.value(v)) out.push_back(v);
  }
  return out;
}

bool is_clique(const Graph& g, const std::vector<std::string>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!g.adjacent(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

CliqueResult solve_max_clique(const Graph& g, std::size_t cap) {
  const PenaltyKB pk = encode_max_clique(g);
  SearchConfig cfg;
  cfg.witness_mode = WitnessMode::kOne;
  cfg.cap = cap;
  const SolveResult r = min_cost_interpretations(pk, cfg);
  CliqueResult out;
  out.optimum = r.optimum;
  out.vertices = decode_clique(g, r.witnesses.front());
  out.size = out.vertices.size();
  if (!is_clique(g, out.vertices)) throw std::logic_error("decoded vertex set is not a clique");
  return out;
}

Graph read_dimacs_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  long n = -1;
  std::vector<std::pair<std::string, std::string>> edges;
  auto name = [](long i) { return "v" + std::to_string(i); };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      std::string format;
      long m = 0;
      if (n >= 0) throw ParseError("duplicate problem line", line_no, 1);
      if (!(ls >> format >> n >> m) || format != "edge" || n < 0 || m < 0) {
        throw ParseError("malformed header, expected 'p edge <n> <m>'", line_no, 1);
      }
    } else if (head == "e") {
      long u = 0, v = 0;
      if (n < 0) throw ParseError("edge before problem line", line_no, 1);
      if (!(ls >> u >> v)) throw ParseError("malformed edge line", line_no, 1);
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range", line_no, 1);
      if (u == v) throw ParseError("self-loop", line_no, 1);
      edges.emplace_back(name(u), name(v));
    } else {
      throw ParseError("unexpected line '" + head + "'", line_no, 1);
    }
  }
  if (n < 0) throw ParseError("missing problem line 'p edge <n> <m>'", 0, 0);
  std::vector<std::string> vertices;
  for (long i = 1; i <= n; ++i) vertices.push_back(name(i));
  try {
    return Graph(std::move(vertices), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Literals of a clause as signed 1-based variable numbers.
std::vector<long> clause_literals(const Formula& f, const Vocabulary& v) {
  const Formula c = canonicalize(f);
  std::vector<long> lits;
  std::vector<Formula> stack{c};
  if (c.kind() == Formula::Kind::kBottom) return lits;
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.kind() == Formula::Kind::kOr) {
      stack.push_back(g.rhs());
      stack.push_back(g.lhs());
    } else if (g.kind() == Formula::Kind::kAtom) {
      lits.push_back(static_cast<long>(*v.index_of(g.name())) + 1);
    } else if (g.is_literal()) {
      lits.push_back(-(static_cast<long>(*v.index_of(g.operand().name())) + 1));
    } else {
      throw std::invalid_argument("non-clausal formula: " + f.to_string());
    }
  }
  return lits;
}

}  // namespace

std::string export_wcnf(const PenaltyKB& pk, const Rational& scale) {
  if (sgn(scale) <= 0) throw std::invalid_argument("scale must be positive");
  const Vocabulary& v = pk.vocabulary();
  std::vector<std::vector<long>> clauses;
  std::vector<std::optional<mpz_class>> weights;
  mpz_class top = 1;
  for (const auto& item : pk.items()) {
    clauses.push_back(clause_literals(item.formula, v));
    if (item.penalty.is_infinite()) {
      weights.emplace_back();
      continue;
    }
    Rational w = item.penalty.value() * scale;
    w.canonicalize();
    if (w.get_den() != 1) {
      throw std::invalid_argument("weight " + format_rational(w) +
                                  " is not integral; pass a scaling factor");
    }
    top += w.get_num();
    weights.emplace_back(w.get_num());
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << "c var " << i + 1 << ' ' << v[i] << '\n';
  os << "p wcnf " << v.size() << ' ' << clauses.size() << ' ' << top.get_str() << '\n';
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    os << (weights[i] ? weights[i]->get_str() : top.get_str());
    for (long lit : clauses[i]) os << ' ' << lit;
    os << " 0\n";
  }
  return os.str();
}

PenaltyKB import_wcnf(std::string_view text, const Rational& scale) {
  if (sgn(scale) <= 0) throw std::invalid_argument("scale must be positive");
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::map<long, std::string> names;
  long vars = -1;
  std::optional<mpz_class> top;
  std::vector<std::pair<std::vector<long>, std::optional<mpz_class>>> clauses;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "c") {
      std::string tag, name;
      long index = 0;
      if (ls >> tag >> index >> name && tag == "var") names[index] = name;
      continue;
    }
    if (head == "p") {
      std::string format, top_text;
      long count = 0;
      if (!(ls >> format >> vars >> count) || format != "wcnf" || vars < 0) {
        throw ParseError("malformed header, expected 'p wcnf <vars> <clauses> <top>'", line_no, 1);
      }
      if (ls >> top_text) {
        if (!all_digits(top_text)) throw ParseError("malformed top weight '" + top_text + "'", line_no, 1);
        top = mpz_class(top_text, 10);
      }
      continue;
    }
    std::optional<mpz_class> weight;
    if (head != "h") {
      if (!all_digits(head)) throw ParseError("malformed weight '" + head + "'", line_no, 1);
      weight = mpz_class(head, 10);
      if (sgn(*weight) <= 0) throw ParseError("weights must be positive", line_no, 1);
      if (top && *weight >= *top) weight.reset();
    }
    std::vector<long> lits;
    long lit = 0;
    bool terminated = false;
    while (ls >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      if (vars >= 0 && std::labs(lit) > vars) throw ParseError("variable out of range", line_no, 1);
      lits.push_back(lit);
    }
    if (!terminated) throw ParseError("clause not terminated by 0", line_no, 1);
    clauses.emplace_back(std::move(lits), std::move(weight));
  }
  auto atom = [&](long var) {
    auto it = names.find(var);
    return Formula::atom(it != names.end() ? it->second : "x" + std::to_string(var));
  };
  std::vector<std::pair<Formula, Penalty>> items;
  for (auto& [lits, weight] : clauses) {
    Formula f = Formula::bottom();
    for (std::size_t i = 0; i < lits.size(); ++i) {
      Formula l = lits[i] > 0 ? atom(lits[i]) : Formula::negation(atom(-lits[i]));
      f = i == 0 ? l : Formula::disjunction(f, l);
    }
    if (weight) {
      Rational w(*weight);
      w /= scale;
      items.emplace_back(f, Penalty(w));
    } else {
      items.emplace_back(f, Penalty::infinite());
    }
  }
  return PenaltyKB(std::move(items));
}

}  // namespace penalty
