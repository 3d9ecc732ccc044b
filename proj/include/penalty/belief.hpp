#ifndef PENALTY_BELIEF_HPP
#define PENALTY_BELIEF_HPP

// Belief-function view of penalty knowledge bases: each weighted formula is a
// simple support function, the base is their unnormalized Dempster
// combination, and interpretation costs are minus the log of its contour.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "penalty/kb.hpp"
#include "penalty/solver.hpp"

namespace penalty {

/// Masses must sum to one within this tolerance.
inline constexpr double kMassTolerance = 1e-9;

struct FocalElement {
  Formula formula;  ///< canonical
  double mass;
};

/// Finitely many focal formulas with strictly positive masses summing to one.
/// Keys are canonical formulas, so syntactic variants share an entry. The
/// contradiction may be focal: combination is not renormalized.
class MassFunction {
 public:
  /// Vacuous mass function, all mass on T.
  MassFunction();

  /// Canonicalizes keys, merges duplicates and drops zero masses. Throws
  /// std::invalid_argument on negative masses or a total away from one.
  static MassFunction from_entries(const std::vector<std::pair<Formula, double>>& entries);

  /// Sorted by printed canonical formula.
  std::vector<FocalElement> focal_elements() const;
  std::size_t size() const { return focal_.size(); }
  /// Mass of the canonical form of f, zero if not focal.
  double mass(const Formula& f) const;
  double total() const;

 private:
  friend MassFunction combine(const MassFunction&, const MassFunction&);
  friend MassFunction merge_equivalent_focals(const MassFunction&, const Vocabulary&);

  std::map<std::string, FocalElement> focal_;
};

/// m(f) = 1 - e^-a, m(T) = e^-a, with e^-inf = 0.
MassFunction simple_support(const Formula& f, const Penalty& a);

/// Unnormalized Dempster rule: the product of masses goes to the conjunction
/// of the focal pair; contradictory conjunctions accumulate on F.
MassFunction combine(const MassFunction& m1, const MassFunction& m2);

/// Merges focal elements with identical truth tables over v. The
/// representative is the smallest printed form.
MassFunction merge_equivalent_focals(const MassFunction& m, const Vocabulary& v);

/// Combination of the simple support functions of every item.
MassFunction kb_mass(const PenaltyKB& pk, std::size_t item_cap = kDefaultSubsetCap);

/// Sum of the masses of focal elements satisfied by w.
double contour(const MassFunction& m, const Interpretation& w);

/// Sum of the masses of focal elements consistent with f.
double plausibility(const MassFunction& m, const Formula& f,
                    std::size_t cap = kDefaultEnumerationCap);

/// max over w of |k_pk(w) + ln pl(w)|, where an infinite cost paired with a
/// contour of exactly zero counts as agreement.
double check_contour_identity(const PenaltyKB& pk, std::size_t cap = kDefaultEnumerationCap);

/// Leading term r * eps^k of the plausibility of a formula when item i
/// carries mass eps^penalty_i on T.
struct OrderOfMagnitude {
  Cost exponent;
  std::uint64_t multiplicity = 0;
};

/// Enumerates the index subsets whose conjunction is consistent with f and
/// keeps those of least excluded penalty. Subsets whose excluded penalty is
/// infinite contribute nothing, so the exponent is infinite with multiplicity
/// zero when no other subset exists.
OrderOfMagnitude infinitesimal_plausibility(const PenaltyKB& pk, const Formula& f,
                                            std::size_t cap = kDefaultEnumerationCap,
                                            std::size_t item_cap = kDefaultSubsetCap);

}  // namespace penalty

#endif  // PENALTY_BELIEF_HPP
