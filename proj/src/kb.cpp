#include "penalty/kb.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "penalty/error.hpp"

namespace penalty {

PenaltyKB::PenaltyKB(std::vector<std::pair<Formula, Penalty>> items) {
  items_.reserve(items.size());
  std::vector<Formula> fs;
  fs.reserve(items.size());
  for (auto& [f, p] : items) {
    fs.push_back(f);
    items_.push_back({std::move(f), std::move(p), next_tag_++});
  }
  vocabulary_ = Vocabulary::of(fs);
}

std::vector<Formula> PenaltyKB::formulas() const {
  std::vector<Formula> out;
  out.reserve(items_.size());
  for (const auto& item : items_) out.push_back(item.formula);
  return out;
}

std::size_t PenaltyKB::position_of(std::size_t tag) const {
  auto it = std::find_if(items_.begin(), items_.end(),
                         [&](const WeightedFormula& w) { return w.tag == tag; });
  if (it == items_.end()) throw std::out_of_range("no item with tag " + std::to_string(tag));
  return static_cast<std::size_t>(it - items_.begin());
}

PenaltyKB PenaltyKB::with_item(Formula formula, Penalty penalty) const {
  PenaltyKB out = *this;
  out.vocabulary_ = vocabulary_.merged_with(Vocabulary::of(formula));
  out.items_.push_back({std::move(formula), std::move(penalty), out.next_tag_++});
  return out;
}

SubTheory::SubTheory(std::vector<std::size_t> tags) : tags_(std::move(tags)) {
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

SubTheory SubTheory::all_of(const PenaltyKB& pk) {
  std::vector<std::size_t> tags;
  for (const auto& item : pk.items()) tags.push_back(item.tag);
  return SubTheory(std::move(tags));
}

SubTheory SubTheory::from_positions(const PenaltyKB& pk, std::uint64_t positions) {
  std::vector<std::size_t> tags;
  for (std::size_t i = 0; i < pk.size() && i < 64; ++i) {
    if (positions >> i & 1) tags.push_back(pk.items()[i].tag);
  }
  return SubTheory(std::move(tags));
}

bool SubTheory::contains(std::size_t tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag);
}

namespace {

void check_tags(const PenaltyKB& pk, const SubTheory& a) {
  for (auto tag : a.tags()) {
    bool found = std::any_of(pk.items().begin(), pk.items().end(),
                             [&](const WeightedFormula& w) { return w.tag == tag; });
    if (!found) throw std::invalid_argument("sub-theory has foreign tag " + std::to_string(tag));
  }
}

void check_covers(const PenaltyKB& pk, const Vocabulary& v) {
  if (!v.includes(pk.vocabulary())) {
    throw VocabularyError("interpretation does not cover the knowledge base vocabulary");
  }
}

}  // namespace

std::vector<Formula> formulas_of(const PenaltyKB& pk, const SubTheory& a) {
  check_tags(pk, a);
  std::vector<Formula> out;
  for (const auto& item : pk.items()) {
    if (a.contains(item.tag)) out.push_back(item.formula);
  }
  return out;
}

SubTheory satisfied_by(const PenaltyKB& pk, const Interpretation& w) {
  check_covers(pk, w.vocabulary());
  std::vector<std::size_t> tags;
  for (const auto& item : pk.items()) {
    if (evaluate(item.formula, w)) tags.push_back(item.tag);
  }
  return SubTheory(std::move(tags));
}

Cost interpretation_cost(const PenaltyKB& pk, const Interpretation& w) {
  check_covers(pk, w.vocabulary());
  Cost total;
  for (const auto& item : pk.items()) {
    if (!evaluate(item.formula, w)) total += item.penalty.cost();
  }
  return total;
}

Cost subtheory_cost(const PenaltyKB& pk, const SubTheory& a) {
  check_tags(pk, a);
  Cost total;
  for (const auto& item : pk.items()) {
    if (!a.contains(item.tag)) total += item.penalty.cost();
  }
  return total;
}

Preference prefer(const PenaltyKB& pk, const SubTheory& a, const SubTheory& b) {
  const Cost ca = subtheory_cost(pk, a);
  const Cost cb = subtheory_cost(pk, b);
  if (cb < ca) return Preference::kSecond;
  if (ca < cb) return Preference::kFirst;
  return Preference::kTie;
}

PenaltyKB normalize(const PenaltyKB& pk, MergeMode mode) {
  struct Group {
    Formula formula;
    Cost total;
  };
  std::vector<Group> groups;
  if (mode == MergeMode::kSyntactic) {
    std::map<std::string, std::size_t> index;
    for (const auto& item : pk.items()) {
      auto [it, fresh] = index.emplace(canonicalize(item.formula).to_string(), groups.size());
      if (fresh) groups.push_back({item.formula, item.penalty.cost()});
      else groups[it->second].total += item.penalty.cost();
    }
  } else {
    std::map<std::vector<bool>, std::size_t> index;
    for (const auto& item : pk.items()) {
      auto [it, fresh] = index.emplace(truth_table(item.formula, pk.vocabulary()), groups.size());
      if (fresh) groups.push_back({item.formula, item.penalty.cost()});
      else groups[it->second].total += item.penalty.cost();
    }
  }
  std::vector<std::pair<Formula, Penalty>> items;
  items.reserve(groups.size());
  for (auto& g : groups) {
    items.emplace_back(g.formula,
                       g.total.is_infinite() ? Penalty::infinite() : Penalty(g.total.value()));
  }
  return PenaltyKB(std::move(items));
}

CompiledKB::CompiledKB(const PenaltyKB& pk, const Vocabulary& v) {
  check_covers(pk, v);
  formulas_.reserve(pk.size());
  for (const auto& item : pk.items()) {
    formulas_.emplace_back(item.formula, v);
    penalties_.push_back(item.penalty.cost());
  }
}

Cost CompiledKB::cost(std::uint64_t code) const {
  Cost total;
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    if (!formulas_[i].evaluate(code)) total += penalties_[i];
  }
  return total;
}

std::uint64_t CompiledKB::satisfied_positions(std::uint64_t code) const {
  if (formulas_.size() > 64) throw CapExceeded("more than 64 items");
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < formulas_.size(); ++i) {
    if (formulas_[i].evaluate(code)) out |= std::uint64_t{1} << i;
  }
  return out;
}

std::vector<Cost> cost_table(const PenaltyKB& pk, const Vocabulary& v, std::size_t cap) {
  check_enumeration_cap(v, cap);
  const CompiledKB compiled(pk, v);
  const std::uint64_t n = std::uint64_t{1} << v.size();
  std::vector<Cost> out;
  out.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) out.push_back(compiled.cost(code));
  return out;
}

namespace {

template <typename Compare>
bool compare_tables(const PenaltyKB& pk, const PenaltyKB& other, std::size_t cap, Compare cmp) {
  const Vocabulary v = pk.vocabulary().merged_with(other.vocabulary());
  check_enumeration_cap(v, cap);
  const CompiledKB a(pk, v), b(other, v);
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    if (!cmp(a.cost(code), b.cost(code))) return false;
  }
  return true;
}

}  // namespace

bool semantically_equivalent(const PenaltyKB& pk, const PenaltyKB& other, std::size_t cap) {
  return compare_tables(pk, other, cap, [](const Cost& x, const Cost& y) { return x == y; });
}

bool less_expensive(const PenaltyKB& pk, const PenaltyKB& other, std::size_t cap) {
  return compare_tables(pk, other, cap, [](const Cost& x, const Cost& y) { return x <= y; });
}

PenaltyKB add_hard(const PenaltyKB& pk, const Formula& f) {
  return pk.with_item(f, Penalty::infinite());
}

std::vector<Formula> hard_core(const PenaltyKB& pk) {
  std::vector<Formula> out;
  for (const auto& item : pk.items()) {
    if (item.penalty.is_infinite()) out.push_back(item.formula);
  }
  return out;
}

PenaltyKB parse_kb(std::string_view text) {
  std::vector<std::pair<Formula, Penalty>> items;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    std::size_t end = line.find_first_of(" \t", start);
    if (end == std::string_view::npos) {
      throw ParseError("missing formula after penalty", line_no, line.size() + 1);
    }
    std::string_view penalty_text = line.substr(start, end - start);
    Penalty penalty = Penalty::infinite();
    try {
      penalty = Penalty::parse(penalty_text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no, start + 1);
    }
    std::string_view formula_text = line.substr(end);
    try {
      items.emplace_back(parse_formula(formula_text), penalty);
    } catch (const ParseError& e) {
      // Re-anchor the formula parser's column on the full line.
      std::string msg = e.what();
      if (auto at = msg.rfind(" at "); at != std::string::npos) msg.resize(at);
      throw ParseError(msg, line_no, end + e.column());
    }
  }
  return PenaltyKB(std::move(items));
}

std::string format_kb(const PenaltyKB& pk) {
  std::ostringstream os;
  for (const auto& item : pk.items()) os << item.penalty << ' ' << item.formula << '\n';
  return os.str();
}

}  // namespace penalty
