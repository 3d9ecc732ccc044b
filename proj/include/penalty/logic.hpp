#ifndef PENALTY_LOGIC_HPP
#define PENALTY_LOGIC_HPP

// Propositional language: formulas, vocabularies, interpretations and
// desk-scale classical reasoning by enumeration.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace penalty {

/// Largest vocabulary that may be enumerated (2^24 interpretations).
inline constexpr std::size_t kDefaultEnumerationCap = 24;

/// Interpretations are packed into a 64-bit word.
inline constexpr std::size_t kMaxInterpretationAtoms = 64;

/// Letters, digits and underscore, starting with a letter; "T" and "F" are
/// reserved for the constants.
bool is_valid_atom_name(std::string_view name);

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { kTop, kBottom, kAtom, kNot, kAnd, kOr, kImplies, kIff };

  /// Default-constructed formula is Top.
  Formula();

  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const;
  bool is_binary() const;
  bool is_literal() const;

  /// Atom name; only valid for kAtom.
  const std::string& name() const;
  /// Operand of a negation.
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Atom names occurring in the formula, sorted and unique.
  std::vector<std::string> atoms() const;

  /// Concrete syntax; parse_formula(f.to_string()) == f.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Formula& f);

/// Total order on formulas by their printed form.
struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const;
};

/// Parses the textual grammar:
///   iff := imp ("<->" imp)*   imp := or ("->" imp)?   or := and ("|" and)*
///   and := unary ("&" unary)* unary := "!" unary | atom | "T" | "F" | "(" iff ")"
/// Throws ParseError with a 1-based line/column on malformed input.
Formula parse_formula(std::string_view text);

/// Sorted flattening of & and |, double-negation elimination and constant
/// absorption. Logically equivalent to the input; syntactic duplicates up to
/// AC of & and | map to the same result.
Formula canonicalize(const Formula& f);

/// Left-nested conjunction; Top for an empty list.
Formula conjoin(std::span<const Formula> fs);

/// Ordered set of atoms, lexicographic by name. Cheap to copy.
class Vocabulary {
 public:
  Vocabulary();
  explicit Vocabulary(std::vector<std::string> names);

  static Vocabulary of(const Formula& f);
  static Vocabulary of(std::span<const Formula> fs);

  Vocabulary merged_with(const Vocabulary& other) const;

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }
  /// True if every atom of `other` is in this vocabulary.
  bool includes(const Vocabulary& other) const;

  auto begin() const { return names_->begin(); }
  auto end() const { return names_->end(); }

  friend bool operator==(const Vocabulary& a, const Vocabulary& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Bit of atom `index` in a vocabulary of `size` atoms. The first atom is the
/// most significant bit, so counting 0..2^n-1 enumerates interpretations in
/// lexicographic order with false < true.
constexpr std::uint64_t atom_bit(std::size_t index, std::size_t size) {
  return std::uint64_t{1} << (size - 1 - index);
}

/// Total truth assignment over a vocabulary.
class Interpretation {
 public:
  Interpretation(Vocabulary vocabulary, std::uint64_t code);

  /// Atoms listed are true, every other atom of the vocabulary false.
  static Interpretation from_true_atoms(Vocabulary vocabulary,
                                        std::span<const std::string> true_atoms);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  /// Rank in enumeration order.
  std::uint64_t code() const { return code_; }

  bool value(std::size_t index) const;
  bool value(std::string_view atom) const;

  /// Same truth values, over a superset vocabulary with extra atoms false.
  Interpretation extended_to(const Vocabulary& wider) const;

  /// Space separated signed atoms in vocabulary order, e.g. "a b !c".
  std::string to_string() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b);
  /// Lexicographic, false < true, in vocabulary order.
  friend std::strong_ordering operator<=>(const Interpretation& a,
                                          const Interpretation& b);

 private:
  Vocabulary vocabulary_;
  std::uint64_t code_;
};

std::ostream& operator<<(std::ostream& os, const Interpretation& w);

/// Truth assignment to a subset of a vocabulary.
class PartialAssignment {
 public:
  explicit PartialAssignment(Vocabulary vocabulary);
  explicit PartialAssignment(const Interpretation& w);
  /// Atoms whose bit is set in `assigned` take their bit from `values`.
  PartialAssignment(Vocabulary vocabulary, std::uint64_t assigned, std::uint64_t values);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  std::uint64_t assigned_mask() const { return assigned_; }
  std::uint64_t value_mask() const { return values_; }

  std::optional<bool> value(std::size_t index) const;
  PartialAssignment with(std::size_t index, bool value) const;
  PartialAssignment with(std::string_view atom, bool value) const;
  bool is_total() const;

 private:
  Vocabulary vocabulary_;
  std::uint64_t assigned_ = 0;
  std::uint64_t values_ = 0;
};

enum class Truth { kFalse, kTrue, kUnknown };

std::ostream& operator<<(std::ostream& os, Truth t);

/// Formula bound to a vocabulary: atoms resolved to bit positions so that
/// evaluation in inner loops needs no name lookups.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const Vocabulary& vocabulary);

  bool evaluate(std::uint64_t code) const;
  /// Kleene three-valued evaluation.
  Truth evaluate(std::uint64_t assigned, std::uint64_t values) const;

 private:
  struct Op {
    Formula::Kind kind;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    std::uint64_t bit = 0;
  };
  std::uint32_t compile(const Formula& f, const Vocabulary& vocabulary);
  bool eval(std::uint32_t at, std::uint64_t code) const;
  Truth eval3(std::uint32_t at, std::uint64_t assigned, std::uint64_t values) const;

  std::vector<Op> ops_;
  std::uint32_t root_ = 0;
};

bool evaluate(const Formula& f, const Interpretation& w);
Truth partial_evaluate(const Formula& f, const PartialAssignment& p);

/// All 2^|v| interpretations in counting order.
class InterpretationRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Interpretation;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Interpretation;

    iterator() = default;
    iterator(const Vocabulary* vocabulary, std::uint64_t code)
        : vocabulary_(vocabulary), code_(code) {}

    Interpretation operator*() const { return Interpretation(*vocabulary_, code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++code_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.code_ == b.code_;
    }

   private:
    const Vocabulary* vocabulary_ = nullptr;
    std::uint64_t code_ = 0;
  };

  explicit InterpretationRange(Vocabulary vocabulary) : vocabulary_(std::move(vocabulary)) {}

  iterator begin() const { return {&vocabulary_, 0}; }
  iterator end() const { return {&vocabulary_, count()}; }
  std::uint64_t count() const { return std::uint64_t{1} << vocabulary_.size(); }

 private:
  Vocabulary vocabulary_;
};

/// Throws CapExceeded if |v| > cap.
InterpretationRange enumerate_interpretations(const Vocabulary& v,
                                              std::size_t cap = kDefaultEnumerationCap);

/// Throws CapExceeded if |v| > cap.
void check_enumeration_cap(const Vocabulary& v, std::size_t cap = kDefaultEnumerationCap);

bool entails(const Formula& f, const Formula& g, std::size_t cap = kDefaultEnumerationCap);
bool equivalent(const Formula& f, const Formula& g, std::size_t cap = kDefaultEnumerationCap);
bool is_consistent(std::span<const Formula> fs, std::size_t cap = kDefaultEnumerationCap);
bool is_satisfiable(const Formula& f, std::size_t cap = kDefaultEnumerationCap);

/// Model set of f over v as a bitset indexed by interpretation code.
std::vector<bool> truth_table(const Formula& f, const Vocabulary& v,
                              std::size_t cap = kDefaultEnumerationCap);

}  // namespace penalty

#endif  // PENALTY_LOGIC_HPP
