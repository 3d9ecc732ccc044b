#ifndef PENALTY_ENCODERS_HPP
#define PENALTY_ENCODERS_HPP

// Discrete optimization front end: graphs, the max-clique encoding, DIMACS
// graph input and weighted CNF interchange.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penalty/kb.hpp"
#include "penalty/solver.hpp"

namespace penalty {

/// Undirected simple graph. Vertex names double as atom names.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on invalid or duplicate vertex names,
  /// unknown endpoints, self-loops or repeated edges.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(std::size_t u, std::size_t v) const;
  bool adjacent(std::string_view u, std::string_view v) const;
  std::size_t index_of(std::string_view name) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::vector<bool>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct CliqueResult {
  /// In graph vertex order.
  std::vector<std::string> vertices;
  std::size_t size = 0;
  /// Optimum of the encoding: |vertices| - clique size.
  Cost optimum;
};

/// <v, 1> per vertex and <!x | !y, inf> per unordered non-adjacent pair, in
/// vertex order then pair order.
PenaltyKB encode_max_clique(const Graph& g);

/// Vertices whose atom is true in w.
std::vector<std::string> decode_clique(const Graph& g, const Interpretation& w);

bool is_clique(const Graph& g, const std::vector<std::string>& vertices);

/// Solves the encoding and decodes the lexicographically smallest optimal
/// interpretation. Throws std::logic_error if the decoded set is not a clique.
CliqueResult solve_max_clique(const Graph& g, std::size_t cap = kDefaultEnumerationCap);

/// DIMACS "p edge n m" with "e u v" lines; vertices are named v1..vn.
Graph read_dimacs_graph(std::string_view text);

/// Weighted CNF: "p wcnf <vars> <clauses> <top>" then "<weight> <lits> 0".
/// Hard clauses carry top = 1 + sum of soft weights. Finite penalties are
/// multiplied by `scale` and must then be integers. Throws
/// std::invalid_argument for non-clausal formulas or non-integral weights.
std::string export_wcnf(const PenaltyKB& pk, const Rational& scale = 1);

/// Inverse of export_wcnf. Variable names come from "c var <i> <name>"
/// comments when present, otherwise x<i>.
PenaltyKB import_wcnf(std::string_view text, const Rational& scale = 1);

}  // namespace penalty

#endif  // PENALTY_ENCODERS_HPP
