#include "penalty/logic.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include "penalty/error.hpp"

namespace penalty {

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula lhs;
  Formula rhs;

  Node(Kind k, std::string n) : kind(k), name(std::move(n)), lhs(nullptr), rhs(nullptr) {}
  Node(Kind k, Formula l, Formula r) : kind(k), lhs(std::move(l)), rhs(std::move(r)) {}
};

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name == "T" || name == "F") return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(top()) {}

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Kind::kTop, std::string{}));
  return f;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Kind::kBottom, std::string{}));
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Kind::kAtom, std::move(name)));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Kind::kNot, std::move(f), Formula(nullptr)));
}

Formula Formula::binary(Kind kind, Formula lhs, Formula rhs) {
  switch (kind) {
    case Kind::kAnd:
    case Kind::kOr:
    case Kind::kImplies:
    case Kind::kIff:
      return Formula(std::make_shared<const Node>(kind, std::move(lhs), std::move(rhs)));
    default:
      throw std::invalid_argument("Formula::binary: not a binary connective");
  }
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return binary(Kind::kAnd, std::move(lhs), std::move(rhs));
}
Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return binary(Kind::kOr, std::move(lhs), std::move(rhs));
}
Formula Formula::implication(Formula lhs, Formula rhs) {
  return binary(Kind::kImplies, std::move(lhs), std::move(rhs));
}
Formula Formula::equivalence(Formula lhs, Formula rhs) {
  return binary(Kind::kIff, std::move(lhs), std::move(rhs));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  auto k = kind();
  return k == Kind::kAnd || k == Kind::kOr || k == Kind::kImplies || k == Kind::kIff;
}

bool Formula::is_literal() const {
  return kind() == Kind::kAtom || (kind() == Kind::kNot && operand().kind() == Kind::kAtom);
}

const std::string& Formula::name() const {
  assert(kind() == Kind::kAtom);
  return node_->name;
}

const Formula& Formula::operand() const {
  assert(kind() == Kind::kNot);
  return node_->lhs;
}

const Formula& Formula::lhs() const {
  assert(is_binary());
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  assert(is_binary());
  return node_->rhs;
}

namespace {

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return;
    case Formula::Kind::kAtom:
      out.insert(f.name());
      return;
    case Formula::Kind::kNot:
      collect_atoms(f.operand(), out);
      return;
    default:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
  }
}

// Binding strength; higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kIff: return 1;
    case Formula::Kind::kImplies: return 2;
    case Formula::Kind::kOr: return 3;
    case Formula::Kind::kAnd: return 4;
    default: return 5;
  }
}

const char* symbol(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kIff: return " <-> ";
    case Formula::Kind::kImplies: return " -> ";
    case Formula::Kind::kOr: return " | ";
    case Formula::Kind::kAnd: return " & ";
    default: return "";
  }
}

void print(std::ostream& os, const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTop: os << 'T'; return;
    case K::kBottom: os << 'F'; return;
    case K::kAtom: os << f.name(); return;
    case K::kNot: {
      os << '!';
      bool paren = f.operand().is_binary();
      if (paren) os << '(';
      print(os, f.operand());
      if (paren) os << ')';
      return;
    }
    default: break;
  }
  // &, | and <-> associate to the left, -> to the right.
  const int p = precedence(f.kind());
  const bool right_assoc = f.kind() == K::kImplies;
  const int lp = precedence(f.lhs().kind());
  const int rp = precedence(f.rhs().kind());
  bool paren_l = lp < p || (lp == p && right_assoc);
  bool paren_r = rp < p || (rp == p && !right_assoc);
  if (paren_l) os << '(';
  print(os, f.lhs());
  if (paren_l) os << ')';
  os << symbol(f.kind());
  if (paren_r) os << '(';
  print(os, f.rhs());
  if (paren_r) os << ')';
}

}  // namespace

std::vector<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(*this, out);
  return {out.begin(), out.end()};
}

std::string Formula::to_string() const {
  std::ostringstream os;
  print(os, *this);
  return os.str();
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      return true;
    case Formula::Kind::kAtom:
      return a.name() == b.name();
    case Formula::Kind::kNot:
      return a.operand() == b.operand();
    default:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

bool FormulaLess::operator()(const Formula& a, const Formula& b) const {
  return a.to_string() < b.to_string();
}

Formula conjoin(std::span<const Formula> fs) {
  if (fs.empty()) return Formula::top();
  Formula out = fs.front();
  for (auto it = fs.begin() + 1; it != fs.end(); ++it) out = Formula::conjunction(out, *it);
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form.

namespace {

void flatten(const Formula& f, Formula::Kind kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.lhs(), kind, out);
    flatten(f.rhs(), kind, out);
  } else {
    out.push_back(canonicalize(f));
  }
}

Formula canonical_nary(const Formula& f) {
  using K = Formula::Kind;
  const K kind = f.kind();
  const K unit = kind == K::kAnd ? K::kTop : K::kBottom;
  const K absorbing = kind == K::kAnd ? K::kBottom : K::kTop;

  std::vector<Formula> parts;
  flatten(f, kind, parts);
  // Canonical children may themselves be the same connective after
  // constant absorption; splice them in.
  std::vector<std::pair<std::string, Formula>> keyed;
  std::vector<Formula> pending(parts.begin(), parts.end());
  while (!pending.empty()) {
    Formula g = pending.back();
    pending.pop_back();
    if (g.kind() == kind) {
      pending.push_back(g.lhs());
      pending.push_back(g.rhs());
      continue;
    }
    if (g.kind() == absorbing) return g;
    if (g.kind() == unit) continue;
    keyed.emplace_back(g.to_string(), g);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  if (keyed.empty()) return kind == K::kAnd ? Formula::top() : Formula::bottom();
  Formula out = keyed.front().second;
  for (std::size_t i = 1; i < keyed.size(); ++i) out = Formula::binary(kind, out, keyed[i].second);
  return out;
}

}  // namespace

Formula canonicalize(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kTop:
    case K::kBottom:
    case K::kAtom:
      return f;
    case K::kNot: {
      Formula inner = canonicalize(f.operand());
      if (inner.kind() == K::kNot) return inner.operand();
      if (inner.kind() == K::kTop) return Formula::bottom();
      if (inner.kind() == K::kBottom) return Formula::top();
      return Formula::negation(inner);
    }
    case K::kAnd:
    case K::kOr:
      return canonical_nary(f);
    default:
      return Formula::binary(f.kind(), canonicalize(f.lhs()), canonicalize(f.rhs()));
  }
}

// ---------------------------------------------------------------------------
// Vocabulary.

Vocabulary::Vocabulary() : names_(std::make_shared<const std::vector<std::string>>()) {}

Vocabulary::Vocabulary(std::vector<std::string> names) {
  for (const auto& n : names) {
    if (!is_valid_atom_name(n)) throw std::invalid_argument("invalid atom name '" + n + "'");
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Vocabulary Vocabulary::of(const Formula& f) { return Vocabulary(f.atoms()); }

Vocabulary Vocabulary::of(std::span<const Formula> fs) {
  std::set<std::string> all;
  for (const auto& f : fs) collect_atoms(f, all);
  return Vocabulary(std::vector<std::string>(all.begin(), all.end()));
}

Vocabulary Vocabulary::merged_with(const Vocabulary& other) const {
  if (other.includes(*this)) return other;
  if (includes(other)) return *this;
  std::vector<std::string> all(begin(), end());
  all.insert(all.end(), other.begin(), other.end());
  return Vocabulary(std::move(all));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  auto it = std::lower_bound(names_->begin(), names_->end(), name);
  if (it == names_->end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

bool Vocabulary::includes(const Vocabulary& other) const {
  return std::includes(begin(), end(), other.begin(), other.end());
}

bool operator==(const Vocabulary& a, const Vocabulary& b) {
  return a.names_ == b.names_ || *a.names_ == *b.names_;
}

// ---------------------------------------------------------------------------
// Interpretations.

namespace {

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_packable(const Vocabulary& v) {
  if (v.size() > kMaxInterpretationAtoms) {
    throw CapExceeded("vocabulary of " + std::to_string(v.size()) +
                      " atoms exceeds the interpretation limit of " +
                      std::to_string(kMaxInterpretationAtoms));
  }
}

std::size_t require_index(const Vocabulary& v, std::string_view atom) {
  auto i = v.index_of(atom);
  if (!i) throw VocabularyError("atom '" + std::string(atom) + "' is not in the vocabulary");
  return *i;
}

}  // namespace

Interpretation::Interpretation(Vocabulary vocabulary, std::uint64_t code)
    : vocabulary_(std::move(vocabulary)), code_(code) {
  check_packable(vocabulary_);
  if ((code_ & ~full_mask(vocabulary_.size())) != 0) {
    throw std::invalid_argument("interpretation code out of range for vocabulary");
  }
}

Interpretation Interpretation::from_true_atoms(Vocabulary vocabulary,
                                               std::span<const std::string> true_atoms) {
  check_packable(vocabulary);
  std::uint64_t code = 0;
  for (const auto& a : true_atoms) code |= atom_bit(require_index(vocabulary, a), vocabulary.size());
  return Interpretation(std::move(vocabulary), code);
}

bool Interpretation::value(std::size_t index) const {
  return (code_ & atom_bit(index, vocabulary_.size())) != 0;
}

bool Interpretation::value(std::string_view atom) const {
  return value(require_index(vocabulary_, atom));
}

Interpretation Interpretation::extended_to(const Vocabulary& wider) const {
  if (!wider.includes(vocabulary_)) {
    throw VocabularyError("extended_to: target vocabulary does not include the source");
  }
  check_packable(wider);
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    if (value(i)) code |= atom_bit(*wider.index_of(vocabulary_[i]), wider.size());
  }
  return Interpretation(wider, code);
}

std::string Interpretation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < vocabulary_.size(); ++i) {
    if (i) out += ' ';
    if (!value(i)) out += '!';
    out += vocabulary_[i];
  }
  return out;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  return a.code_ == b.code_ && a.vocabulary_ == b.vocabulary_;
}

std::strong_ordering operator<=>(const Interpretation& a, const Interpretation& b) {
  if (!(a.vocabulary_ == b.vocabulary_)) {
    auto av = std::vector<std::string>(a.vocabulary_.begin(), a.vocabulary_.end());
    auto bv = std::vector<std::string>(b.vocabulary_.begin(), b.vocabulary_.end());
    return av <=> bv;
  }
  return a.code_ <=> b.code_;
}

std::ostream& operator<<(std::ostream& os, const Interpretation& w) { return os << w.to_string(); }

PartialAssignment::PartialAssignment(Vocabulary vocabulary) : vocabulary_(std::move(vocabulary)) {
  check_packable(vocabulary_);
}

PartialAssignment::PartialAssignment(const Interpretation& w)
    : vocabulary_(w.vocabulary()), assigned_(full_mask(w.vocabulary().size())), values_(w.code()) {}

PartialAssignment::PartialAssignment(Vocabulary vocabulary, std::uint64_t assigned,
                                     std::uint64_t values)
    : vocabulary_(std::move(vocabulary)), assigned_(assigned), values_(values & assigned) {
  check_packable(vocabulary_);
  if ((assigned_ & ~full_mask(vocabulary_.size())) != 0) {
    throw std::invalid_argument("assignment mask out of range for vocabulary");
  }
}

std::optional<bool> PartialAssignment::value(std::size_t index) const {
  const auto bit = atom_bit(index, vocabulary_.size());
  if (!(assigned_ & bit)) return std::nullopt;
  return (values_ & bit) != 0;
}

PartialAssignment PartialAssignment::with(std::size_t index, bool value) const {
  if (index >= vocabulary_.size()) throw VocabularyError("atom index out of range");
  PartialAssignment out = *this;
  const auto bit = atom_bit(index, vocabulary_.size());
  out.assigned_ |= bit;
  if (value) out.values_ |= bit;
  else out.values_ &= ~bit;
  return out;
}

PartialAssignment PartialAssignment::with(std::string_view atom, bool value) const {
  return with(require_index(vocabulary_, atom), value);
}

bool PartialAssignment::is_total() const { return assigned_ == full_mask(vocabulary_.size()); }

std::ostream& operator<<(std::ostream& os, Truth t) {
  switch (t) {
    case Truth::kFalse: return os << "False";
    case Truth::kTrue: return os << "True";
    default: return os << "Unknown";
  }
}

}  // namespace penalty
