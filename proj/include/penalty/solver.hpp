#ifndef PENALTY_SOLVER_HPP
#define PENALTY_SOLVER_HPP

// Minimum-cost interpretation search, costs of consistency and preferred
// sub-theory enumeration.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "penalty/kb.hpp"
#include "penalty/logic.hpp"

namespace penalty {

/// Largest knowledge base whose subsets may be enumerated.
inline constexpr std::size_t kDefaultSubsetCap = 20;

enum class WitnessMode { kOne, kAll };
enum class VariableOrder { kLexicographic, kFrequency };

struct SearchConfig {
  WitnessMode witness_mode = WitnessMode::kAll;
  VariableOrder variable_order = VariableOrder::kFrequency;
  std::size_t cap = kDefaultEnumerationCap;
  /// Called at every branch-and-bound node with the partial assignment and
  /// the penalty already committed by definitely violated items.
  std::function<void(const PartialAssignment&, const Cost&)> on_node;
};

struct SolveResult {
  Cost optimum;
  /// Sorted in enumeration order. In kOne mode, the lexicographically
  /// smallest minimal-cost interpretation.
  std::vector<Interpretation> witnesses;
  std::uint64_t nodes_explored = 0;
};

/// Depth-first branch and bound over partial assignments of pk's vocabulary.
SolveResult min_cost_interpretations(const PenaltyKB& pk, const SearchConfig& cfg = {});
/// Same, over a vocabulary that includes pk's; extra atoms are unconstrained.
SolveResult min_cost_interpretations(const PenaltyKB& pk, const Vocabulary& over,
                                     const SearchConfig& cfg = {});

/// Exhaustive enumeration; the independent oracle for the search above.
SolveResult brute_force_min_cost(const PenaltyKB& pk, const SearchConfig& cfg = {});
SolveResult brute_force_min_cost(const PenaltyKB& pk, const Vocabulary& over,
                                 const SearchConfig& cfg = {});

/// Minimum cost of a model of f; infinite when f has no model.
Cost consistency_cost(const PenaltyKB& pk, const Formula& f,
                      std::size_t cap = kDefaultEnumerationCap);

/// Consistent sub-theories with no strictly cheaper consistent sub-theory.
/// Sorted by tag list.
std::vector<SubTheory> preferred_subtheories(const PenaltyKB& pk,
                                             std::size_t cap = kDefaultEnumerationCap,
                                             std::size_t subset_cap = kDefaultSubsetCap);

/// Minimum-cost sub-theories among those consistent with f. Empty when f is
/// unsatisfiable.
std::vector<SubTheory> phi_preferred_subtheories(const PenaltyKB& pk, const Formula& f,
                                                 std::size_t cap = kDefaultEnumerationCap,
                                                 std::size_t subset_cap = kDefaultSubsetCap);

}  // namespace penalty

#endif  // PENALTY_SOLVER_HPP
