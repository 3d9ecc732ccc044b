#ifndef PENALTY_KB_HPP
#define PENALTY_KB_HPP

// Penalty knowledge bases: multisets of formulas weighted by violation
// penalties, with interpretation and sub-theory costs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "penalty/cost.hpp"
#include "penalty/logic.hpp"

namespace penalty {

struct WeightedFormula {
  Formula formula;
  Penalty penalty;
  /// Occurrence index, unique within its knowledge base.
  std::size_t tag;
};

/// Finite multiset of weighted formulas. Identical pairs may repeat and every
/// occurrence counts.
class PenaltyKB {
 public:
  PenaltyKB() = default;
  explicit PenaltyKB(std::vector<std::pair<Formula, Penalty>> items);

  const std::vector<WeightedFormula>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  /// Union of the item vocabularies.
  const Vocabulary& vocabulary() const { return vocabulary_; }

  std::vector<Formula> formulas() const;
  /// Position of the item carrying `tag`; throws std::out_of_range.
  std::size_t position_of(std::size_t tag) const;

  /// Copy with one more item under a fresh tag.
  PenaltyKB with_item(Formula formula, Penalty penalty) const;

 private:
  std::vector<WeightedFormula> items_;
  Vocabulary vocabulary_;
  std::size_t next_tag_ = 0;
};

/// Subset of a knowledge base's items, identified by tag. Consistency is not
/// part of the type.
class SubTheory {
 public:
  SubTheory() = default;
  explicit SubTheory(std::vector<std::size_t> tags);

  static SubTheory all_of(const PenaltyKB& pk);
  /// Items of pk whose position bit is set in `positions` (bit i = item i).
  static SubTheory from_positions(const PenaltyKB& pk, std::uint64_t positions);

  const std::vector<std::size_t>& tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  bool contains(std::size_t tag) const;

  friend bool operator==(const SubTheory&, const SubTheory&) = default;
  friend auto operator<=>(const SubTheory&, const SubTheory&) = default;

 private:
  std::vector<std::size_t> tags_;
};

/// Formulas of the items in `a`; throws std::invalid_argument on a foreign tag.
std::vector<Formula> formulas_of(const PenaltyKB& pk, const SubTheory& a);

/// Items whose formula w satisfies.
SubTheory satisfied_by(const PenaltyKB& pk, const Interpretation& w);

/// Sum of the penalties of the items w violates.
Cost interpretation_cost(const PenaltyKB& pk, const Interpretation& w);

/// Sum of the penalties of the items not in `a`.
Cost subtheory_cost(const PenaltyKB& pk, const SubTheory& a);

enum class Preference { kFirst, kSecond, kTie };

/// Lower sub-theory cost is preferred; equal costs tie.
Preference prefer(const PenaltyKB& pk, const SubTheory& a, const SubTheory& b);

enum class MergeMode {
  kSyntactic,  ///< identical after canonicalize()
  kSemantic,   ///< logically equivalent (truth tables)
};

/// Merges repeated formulas into one item carrying the summed penalty.
/// Items keep the position of their group's first occurrence.
PenaltyKB normalize(const PenaltyKB& pk, MergeMode mode = MergeMode::kSyntactic);

/// k_pk over every interpretation of v, in enumeration order.
std::vector<Cost> cost_table(const PenaltyKB& pk, const Vocabulary& v,
                             std::size_t cap = kDefaultEnumerationCap);

bool semantically_equivalent(const PenaltyKB& pk, const PenaltyKB& other,
                             std::size_t cap = kDefaultEnumerationCap);

/// k_pk(w) <= k_other(w) for every w.
bool less_expensive(const PenaltyKB& pk, const PenaltyKB& other,
                    std::size_t cap = kDefaultEnumerationCap);

/// pk plus <f, inf>.
PenaltyKB add_hard(const PenaltyKB& pk, const Formula& f);

/// Formulas of the infinitely penalized items.
std::vector<Formula> hard_core(const PenaltyKB& pk);

/// Knowledge base bound to a vocabulary for repeated cost evaluation.
class CompiledKB {
 public:
  CompiledKB(const PenaltyKB& pk, const Vocabulary& v);

  Cost cost(std::uint64_t code) const;
  /// Bit i set iff item i is satisfied.
  std::uint64_t satisfied_positions(std::uint64_t code) const;

 private:
  std::vector<CompiledFormula> formulas_;
  std::vector<Cost> penalties_;
};

/// Line format "<penalty> <formula>", '#' comments, blank lines ignored.
PenaltyKB parse_kb(std::string_view text);
std::string format_kb(const PenaltyKB& pk);

}  // namespace penalty

#endif  // PENALTY_KB_HPP
