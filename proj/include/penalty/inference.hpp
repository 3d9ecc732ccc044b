#ifndef PENALTY_INFERENCE_HPP
#define PENALTY_INFERENCE_HPP

// Nonmonotonic consequence induced by a penalty knowledge base: psi follows
// from phi when every minimum-cost model of phi satisfies psi.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "penalty/kb.hpp"
#include "penalty/solver.hpp"

namespace penalty {

struct Query {
  Formula premise;
  Formula conclusion;
};

/// Minimum-cost models of `premise` over `over` (which must include the
/// vocabularies of pk and premise). Empty iff premise is unsatisfiable.
std::vector<Interpretation> preferred_models(const PenaltyKB& pk, const Formula& premise,
                                             const Vocabulary& over,
                                             std::size_t cap = kDefaultEnumerationCap);

/// Model-side consequence, computed with the branch-and-bound solver.
bool nm_entails(const PenaltyKB& pk, const Query& q, std::size_t cap = kDefaultEnumerationCap);

/// Same relation computed by exhaustive enumeration of interpretations.
bool nm_entails_brute_force(const PenaltyKB& pk, const Query& q,
                            std::size_t cap = kDefaultEnumerationCap);

/// Sub-theory side: every cheapest premise-consistent sub-theory, together
/// with the premise, classically entails the conclusion.
bool nm_entails_by_subtheories(const PenaltyKB& pk, const Query& q,
                               std::size_t cap = kDefaultEnumerationCap,
                               std::size_t subset_cap = kDefaultSubsetCap);

/// Both sides of the reduction of a query to the premise-hardened base:
///   direct  = premise |~ conclusion
///   reduced = premise |= conclusion, or T |~ conclusion in add_hard(pk, premise)
struct ReductionCheck {
  bool direct = false;
  bool reduced = false;
  bool holds() const { return direct == reduced; }
};

/// Throws std::invalid_argument when the premise is unsatisfiable.
ReductionCheck reduction_check(const PenaltyKB& pk, const Query& q,
                               std::size_t cap = kDefaultEnumerationCap);

enum class Postulate {
  kReflexivity,
  kLeftLogicalEquivalence,
  kRightWeakening,
  kAnd,
  kOr,
  kCautiousMonotony,
  kCut,
  kRationalMonotony,
  kSupraclassicality,
};

inline constexpr std::array<Postulate, 9> kAllPostulates = {
    Postulate::kReflexivity,      Postulate::kLeftLogicalEquivalence,
    Postulate::kRightWeakening,   Postulate::kAnd,
    Postulate::kOr,               Postulate::kCautiousMonotony,
    Postulate::kCut,              Postulate::kRationalMonotony,
    Postulate::kSupraclassicality,
};

std::string_view postulate_name(Postulate p);

/// One instance of a postulate. Unary postulates only read `a`, binary ones
/// `a` and `b`.
struct PostulateInstance {
  Postulate postulate;
  Formula a;
  Formula b;
  Formula c;
};

struct PostulateTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct PostulateReport {
  std::array<PostulateTally, kAllPostulates.size()> tallies{};
  std::vector<PostulateInstance> counterexamples;

  const PostulateTally& tally(Postulate p) const {
    return tallies[static_cast<std::size_t>(p)];
  }
  bool all_pass() const { return counterexamples.empty(); }
};

/// Checks every postulate over all tuples drawn from `samples`.
PostulateReport check_postulates(const PenaltyKB& pk, const std::vector<Formula>& samples,
                                 std::size_t cap = kDefaultEnumerationCap);

/// Re-evaluates an instance from scratch; true iff it is violated.
bool violates(const PenaltyKB& pk, const PostulateInstance& instance,
              std::size_t cap = kDefaultEnumerationCap);

std::string describe(const PostulateInstance& instance);

}  // namespace penalty

#endif  // PENALTY_INFERENCE_HPP
