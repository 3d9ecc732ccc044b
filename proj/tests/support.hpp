#ifndef PENALTY_TESTS_SUPPORT_HPP
#define PENALTY_TESTS_SUPPORT_HPP

// Fixtures, random generators and independent oracles shared by the unit,
// property and acceptance binaries. The oracles work on name maps and plain
// recursion so they share no evaluation code with the library.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "penalty/belief.hpp"
#include "penalty/encoders.hpp"
#include "penalty/inference.hpp"
#include "penalty/kb.hpp"
#include "penalty/logic.hpp"
#include "penalty/solver.hpp"

namespace penalty::testing {

inline Formula F(std::string_view text) { return parse_formula(text); }

inline PenaltyKB kb(std::initializer_list<std::pair<const char*, const char*>> items) {
  std::vector<std::pair<Formula, Penalty>> out;
  for (const auto& [f, p] : items) out.emplace_back(F(f), Penalty::parse(p));
  return PenaltyKB(std::move(out));
}

inline PenaltyKB pk1() { return kb({{"a", "inf"}, {"b | c", "10"}, {"!b", "5"}, {"!c", "7"}}); }
inline PenaltyKB pk2() { return kb({{"a", "5"}, {"a", "3"}, {"b", "10"}}); }
inline PenaltyKB pk3() { return kb({{"a", "8"}, {"b", "10"}}); }
inline PenaltyKB pk4() { return kb({{"a & b", "18"}}); }
inline PenaltyKB defaults_kb() {
  return kb({{"a | b", "inf"}, {"!a", "5"}, {"!a | !b", "4"}, {"b -> !c", "2"}, {"a -> c", "1"}});
}

/// Five vertices; non-edges ac, ad, ae, be, ce.
inline Graph example_graph() {
  return Graph({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"b", "d"}, {"c", "d"}, {"d", "e"}});
}

inline Cost fin(long v) { return Cost::finite(Rational(v)); }
inline Cost inf() { return Cost::infinite(); }

// ---------------------------------------------------------------------------
// Generators

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  static std::vector<std::string> atom_pool(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
  }

  Formula formula(int atoms, int depth) {
    if (depth == 0 || coin(0.3)) {
      const int r = uniform(0, 19);
      if (r == 0) return Formula::top();
      if (r == 1) return Formula::bottom();
      return Formula::atom(std::string(1, static_cast<char>('a' + uniform(0, atoms - 1))));
    }
    switch (uniform(0, 5)) {
      case 0:
        return Formula::negation(formula(atoms, depth - 1));
      case 1:
        return Formula::conjunction(formula(atoms, depth - 1), formula(atoms, depth - 1));
      case 2:
      case 3:
        return Formula::disjunction(formula(atoms, depth - 1), formula(atoms, depth - 1));
      case 4:
        return Formula::implication(formula(atoms, depth - 1), formula(atoms, depth - 1));
      default:
        return Formula::equivalence(formula(atoms, depth - 1), formula(atoms, depth - 1));
    }
  }

  /// Formula with no constants, as items of a knowledge base usually are.
  Formula item_formula(int atoms, int depth) {
    for (;;) {
      Formula f = formula(atoms, depth);
      if (!f.atoms().empty()) return f;
    }
  }

  Formula clause(int atoms, int max_len) {
    const int len = uniform(1, max_len);
    Formula out;
    for (int i = 0; i < len; ++i) {
      Formula l = Formula::atom(std::string(1, static_cast<char>('a' + uniform(0, atoms - 1))));
      if (coin()) l = Formula::negation(l);
      out = i == 0 ? l : Formula::disjunction(out, l);
    }
    return out;
  }

  /// Penalty in 1..max, or infinite with probability p_inf.
  Penalty penalty(int max, double p_inf) {
    if (coin(p_inf)) return Penalty::infinite();
    return Penalty(uniform(1, max));
  }

  /// Mix of integers and small fractions.
  Penalty rational_penalty(int max) {
    if (coin(0.15)) return Penalty::infinite();
    Rational r(uniform(1, max * 4), uniform(1, 4));
    r.canonicalize();
    return Penalty(r);
  }

  PenaltyKB kb(int max_items, int atoms, int max_penalty, double p_inf, int depth = 2) {
    std::vector<std::pair<Formula, Penalty>> items;
    const int n = uniform(1, max_items);
    for (int i = 0; i < n; ++i) items.emplace_back(item_formula(atoms, depth), penalty(max_penalty, p_inf));
    return PenaltyKB(std::move(items));
  }

  PenaltyKB clausal_kb(int max_items, int atoms, int max_penalty, double p_inf) {
    std::vector<std::pair<Formula, Penalty>> items;
    const int n = uniform(1, max_items);
    for (int i = 0; i < n; ++i) items.emplace_back(clause(atoms, 3), penalty(max_penalty, p_inf));
    return PenaltyKB(std::move(items));
  }

  /// At least three short clauses over few atoms; usually inconsistent.
  PenaltyKB conflict_kb(int max_items, int atoms, int max_penalty, double p_inf) {
    std::vector<std::pair<Formula, Penalty>> items;
    const int n = uniform(3, max_items);
    for (int i = 0; i < n; ++i) items.emplace_back(clause(atoms, 2), penalty(max_penalty, p_inf));
    return PenaltyKB(std::move(items));
  }

  Graph graph(int max_vertices, double density) {
    const int n = uniform(1, max_vertices);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i + 1));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(density)) edges.emplace_back(names[i], names[j]);
      }
    }
    return Graph(names, edges);
  }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Oracles

using World = std::map<std::string, bool>;

inline bool oracle_eval(const Formula& f, const World& w) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTop:
      return true;
    case K::kBottom:
      return false;
    case K::kAtom:
      return w.at(f.name());
    case K::kNot:
      return !oracle_eval(f.operand(), w);
    case K::kAnd:
      return oracle_eval(f.lhs(), w) && oracle_eval(f.rhs(), w);
    case K::kOr:
      return oracle_eval(f.lhs(), w) || oracle_eval(f.rhs(), w);
    case K::kImplies:
      return !oracle_eval(f.lhs(), w) || oracle_eval(f.rhs(), w);
    case K::kIff:
      return oracle_eval(f.lhs(), w) == oracle_eval(f.rhs(), w);
  }
  return false;
}

/// Every assignment to the names, first name varying slowest.
inline std::vector<World> all_worlds(const std::set<std::string>& names) {
  std::vector<World> out(1);
  for (const auto& n : names) {
    std::vector<World> next;
    for (const auto& w : out) {
      for (bool b : {false, true}) {
        World x = w;
        x[n] = b;
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::set<std::string> names_of(const PenaltyKB& pk, std::initializer_list<Formula> extra = {}) {
  std::set<std::string> out;
  for (const auto& item : pk.items()) {
    for (const auto& a : item.formula.atoms()) out.insert(a);
  }
  for (const auto& f : extra) {
    for (const auto& a : f.atoms()) out.insert(a);
  }
  return out;
}

/// Extended cost kept as (infinite, value).
struct OracleCost {
  bool infinite = false;
  Rational value = 0;

  void add(const Penalty& p) {
    if (p.is_infinite()) infinite = true;
    else value += p.value();
  }
  Cost to_cost() const { return infinite ? Cost::infinite() : Cost::finite(value); }
  friend bool operator<(const OracleCost& a, const OracleCost& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
  friend bool operator==(const OracleCost& a, const OracleCost& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

inline OracleCost oracle_cost(const PenaltyKB& pk, const World& w) {
  OracleCost c;
  for (const auto& item : pk.items()) {
    if (!oracle_eval(item.formula, w)) c.add(item.penalty);
  }
  return c;
}

/// min cost over models of f; infinite when f has none.
inline OracleCost oracle_consistency_cost(const PenaltyKB& pk, const Formula& f) {
  std::optional<OracleCost> best;
  for (const auto& w : all_worlds(names_of(pk, {f}))) {
    if (!oracle_eval(f, w)) continue;
    OracleCost c = oracle_cost(pk, w);
    if (!best || c < *best) best = c;
  }
  return best ? *best : OracleCost{true, 0};
}

/// Sub-theories (position masks) consistent with f, by world enumeration.
inline std::vector<std::uint64_t> oracle_consistent_subsets(const PenaltyKB& pk, const Formula& f) {
  std::set<std::uint64_t> envelopes;
  for (const auto& w : all_worlds(names_of(pk, {f}))) {
    if (!oracle_eval(f, w)) continue;
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pk.size(); ++i) {
      if (oracle_eval(pk.items()[i].formula, w)) m |= std::uint64_t{1} << i;
    }
    envelopes.insert(m);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pk.size()); ++s) {
    for (auto e : envelopes) {
      if ((s & e) == s) {
        out.push_back(s);
        break;
      }
    }
  }
  return out;
}

inline OracleCost oracle_excluded_cost(const PenaltyKB& pk, std::uint64_t kept) {
  OracleCost c;
  for (std::size_t i = 0; i < pk.size(); ++i) {
    if (!(kept >> i & 1)) c.add(pk.items()[i].penalty);
  }
  return c;
}

/// Cheapest f-consistent sub-theories as sorted position masks.
inline std::vector<std::uint64_t> oracle_preferred_subsets(const PenaltyKB& pk, const Formula& f) {
  const auto consistent = oracle_consistent_subsets(pk, f);
  std::optional<OracleCost> best;
  for (auto s : consistent) {
    OracleCost c = oracle_excluded_cost(pk, s);
    if (!best || c < *best) best = c;
  }
  std::vector<std::uint64_t> out;
  for (auto s : consistent) {
    if (oracle_excluded_cost(pk, s) == *best) out.push_back(s);
  }
  return out;
}

inline std::uint64_t positions_mask(const PenaltyKB& pk, const SubTheory& a) {
  std::uint64_t m = 0;
  for (auto tag : a.tags()) m |= std::uint64_t{1} << pk.position_of(tag);
  return m;
}

inline std::vector<std::uint64_t> masks(const PenaltyKB& pk, const std::vector<SubTheory>& as) {
  std::vector<std::uint64_t> out;
  for (const auto& a : as) out.push_back(positions_mask(pk, a));
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute-force maximum cliques as sorted vertex-name lists.
inline std::set<std::vector<std::string>> oracle_max_cliques(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::set<std::vector<std::string>> best;
  std::size_t best_size = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((s >> i & 1) && (s >> j & 1) && !g.adjacent(i, j)) ok = false;
      }
    }
    if (!ok) continue;
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < best_size) continue;
    if (size > best_size) {
      best.clear();
      best_size = size;
    }
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < n; ++i) {
      if (s >> i & 1) vs.push_back(g.vertices()[i]);
    }
    best.insert(vs);
  }
  return best;
}

/// Plausibility of a formula from the product-of-factors expansion: every
/// index subset I contributes prod_{i in I} (1 - e^-a_i) prod_{i not in I} e^-a_i
/// when the conjunction of I is consistent with f.
inline double oracle_plausibility(const PenaltyKB& pk, const Formula& f) {
  double pl = 0;
  for (auto s : oracle_consistent_subsets(pk, f)) {
    double term = 1;
    for (std::size_t i = 0; i < pk.size(); ++i) {
      const Penalty& p = pk.items()[i].penalty;
      const double keep = p.is_infinite() ? 1.0 : -std::expm1(-p.to_double());
      const double drop = p.is_infinite() ? 0.0 : std::exp(-p.to_double());
      term *= (s >> i & 1) ? keep : drop;
    }
    pl += term;
  }
  return pl;
}

}  // namespace penalty::testing

#endif  // PENALTY_TESTS_SUPPORT_HPP
