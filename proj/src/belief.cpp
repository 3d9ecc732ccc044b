#include "penalty/belief.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "penalty/error.hpp"

namespace penalty {

namespace {

// Largest vocabulary for which kb_mass merges equivalent focal elements.
constexpr std::size_t kSemanticMergeCap = 12;

const std::string kTopKey = "T";
const std::string kBottomKey = "F";

}  // namespace

MassFunction::MassFunction() { focal_.emplace(kTopKey, FocalElement{Formula::top(), 1.0}); }

MassFunction MassFunction::from_entries(const std::vector<std::pair<Formula, double>>& entries) {
  MassFunction m;
  m.focal_.clear();
  double total = 0;
  for (const auto& [f, mass] : entries) {
    if (!(mass >= 0) || mass > 1 + kMassTolerance) {
      throw std::invalid_argument("mass out of range for " + f.to_string());
    }
    total += mass;
    if (mass == 0) continue;
    Formula key = canonicalize(f);
    auto [it, fresh] = m.focal_.emplace(key.to_string(), FocalElement{key, mass});
    if (!fresh) it->second.mass += mass;
  }
  if (std::abs(total - 1) > kMassTolerance) {
    throw std::invalid_argument("masses sum to " + std::to_string(total) + ", not 1");
  }
  return m;
}

std::vector<FocalElement> MassFunction::focal_elements() const {
  std::vector<FocalElement> out;
  out.reserve(focal_.size());
  for (const auto& [key, fe] : focal_) out.push_back(fe);
  return out;
}

double MassFunction::mass(const Formula& f) const {
  auto it = focal_.find(canonicalize(f).to_string());
  return it == focal_.end() ? 0.0 : it->second.mass;
}

double MassFunction::total() const {
  double t = 0;
  for (const auto& [key, fe] : focal_) t += fe.mass;
  return t;
}

MassFunction simple_support(const Formula& f, const Penalty& a) {
  if (a.is_infinite()) return MassFunction::from_entries({{f, 1.0}});
  const double alpha = a.to_double();
  // 1 - e^-a computed without cancellation for small a.
  return MassFunction::from_entries({{f, -std::expm1(-alpha)}, {Formula::top(), std::exp(-alpha)}});
}

MassFunction combine(const MassFunction& m1, const MassFunction& m2) {
  MassFunction out;
  out.focal_.clear();
  std::map<std::string, bool> satisfiable;
  for (const auto& [k1, f1] : m1.focal_) {
    for (const auto& [k2, f2] : m2.focal_) {
      const double product = f1.mass * f2.mass;
      if (product == 0) continue;
      Formula conj = k1 == kTopKey   ? f2.formula
                     : k2 == kTopKey ? f1.formula
                                     : canonicalize(Formula::conjunction(f1.formula, f2.formula));
      std::string key = conj.to_string();
      auto sat = satisfiable.find(key);
      if (sat == satisfiable.end()) sat = satisfiable.emplace(key, is_satisfiable(conj)).first;
      if (!sat->second) {
        key = kBottomKey;
        conj = Formula::bottom();
      }
      auto [it, fresh] = out.focal_.emplace(key, FocalElement{conj, product});
      if (!fresh) it->second.mass += product;
    }
  }
  return out;
}

MassFunction merge_equivalent_focals(const MassFunction& m, const Vocabulary& v) {
  MassFunction out;
  out.focal_.clear();
  std::map<std::vector<bool>, std::string> representative;
  for (const auto& [key, fe] : m.focal_) {
    auto table = truth_table(fe.formula, v);
    if (std::none_of(table.begin(), table.end(), [](bool b) { return b; })) {
      auto [it, fresh] = out.focal_.emplace(kBottomKey, FocalElement{Formula::bottom(), fe.mass});
      if (!fresh) it->second.mass += fe.mass;
      continue;
    }
    // Map iteration is in key order, so the first key seen is the smallest.
    auto [rep, fresh] = representative.emplace(std::move(table), key);
    if (fresh) out.focal_.emplace(key, fe);
    else out.focal_.at(rep->second).mass += fe.mass;
  }
  return out;
}

MassFunction kb_mass(const PenaltyKB& pk, std::size_t item_cap) {
  if (pk.size() > item_cap) {
    throw CapExceeded("knowledge base of " + std::to_string(pk.size()) +
                      " items exceeds the combination cap of " + std::to_string(item_cap));
  }
  const bool merge = pk.vocabulary().size() <= kSemanticMergeCap;
  MassFunction m;
  for (const auto& item : pk.items()) {
    m = combine(m, simple_support(item.formula, item.penalty));
    if (merge) m = merge_equivalent_focals(m, pk.vocabulary());
  }
  return m;
}

double contour(const MassFunction& m, const Interpretation& w) {
  double pl = 0;
  for (const auto& fe : m.focal_elements()) {
    if (evaluate(fe.formula, w)) pl += fe.mass;
  }
  return pl;
}

double plausibility(const MassFunction& m, const Formula& f, std::size_t cap) {
  double pl = 0;
  for (const auto& fe : m.focal_elements()) {
    if (is_satisfiable(Formula::conjunction(fe.formula, f), cap)) pl += fe.mass;
  }
  return pl;
}

double check_contour_identity(const PenaltyKB& pk, std::size_t cap) {
  const Vocabulary& v = pk.vocabulary();
  check_enumeration_cap(v, cap);
  const auto focal = kb_mass(pk).focal_elements();
  std::vector<CompiledFormula> compiled;
  compiled.reserve(focal.size());
  for (const auto& fe : focal) compiled.emplace_back(fe.formula, v);
  const CompiledKB costs(pk, v);

  double worst = 0;
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    double pl = 0;
    for (std::size_t i = 0; i < focal.size(); ++i) {
      if (compiled[i].evaluate(code)) pl += focal[i].mass;
    }
    const Cost k = costs.cost(code);
    double deviation;
    if (k.is_infinite()) deviation = pl == 0 ? 0.0 : HUGE_VAL;
    else if (pl <= 0) deviation = HUGE_VAL;
    else deviation = std::abs(k.to_double() + std::log(pl));
    worst = std::max(worst, deviation);
  }
  return worst;
}

namespace {

// Walks every index subset I whose conjunction is consistent with the query.
// `envelopes` are the satisfied-item sets of the query's models; I is
// consistent with the query iff some envelope contains it.
class ConsistentSubsets {
 public:
  ConsistentSubsets(std::vector<Cost> penalties, std::vector<std::uint64_t> envelopes)
      : penalties_(std::move(penalties)), envelopes_(std::move(envelopes)) {}

  OrderOfMagnitude run() {
    if (!envelopes_.empty()) walk(0, envelopes_, Cost::zero());
    OrderOfMagnitude r;
    if (have_min_) {
      r.exponent = min_;
      r.multiplicity = count_;
    } else {
      r.exponent = Cost::infinite();
    }
    return r;
  }

 private:
  void walk(std::size_t i, const std::vector<std::uint64_t>& envelopes, const Cost& excluded) {
    if (i == penalties_.size()) {
      if (excluded.is_infinite()) return;
      if (!have_min_ || excluded < min_) {
        have_min_ = true;
        min_ = excluded;
        count_ = 0;
      }
      if (excluded == min_) ++count_;
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::vector<std::uint64_t> with;
    for (auto e : envelopes) {
      if (e & bit) with.push_back(e);
    }
    if (!with.empty()) walk(i + 1, with, excluded);
    walk(i + 1, envelopes, excluded + penalties_[i]);
  }

  std::vector<Cost> penalties_;
  std::vector<std::uint64_t> envelopes_;
  bool have_min_ = false;
  Cost min_;
  std::uint64_t count_ = 0;
};

}  // namespace

OrderOfMagnitude infinitesimal_plausibility(const PenaltyKB& pk, const Formula& f,
                                            std::size_t cap, std::size_t item_cap) {
  if (pk.size() > item_cap) {
    throw CapExceeded("knowledge base of " + std::to_string(pk.size()) +
                      " items exceeds the subset cap of " + std::to_string(item_cap));
  }
  const Vocabulary v = pk.vocabulary().merged_with(Vocabulary::of(f));
  check_enumeration_cap(v, cap);
  const CompiledKB compiled(pk, v);
  const CompiledFormula query(f, v);
  std::vector<std::uint64_t> envelopes;
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    if (query.evaluate(code)) envelopes.push_back(compiled.satisfied_positions(code));
  }
  std::sort(envelopes.begin(), envelopes.end());
  envelopes.erase(std::unique(envelopes.begin(), envelopes.end()), envelopes.end());

  std::vector<Cost> penalties;
  for (const auto& item : pk.items()) penalties.push_back(item.penalty.cost());
  return ConsistentSubsets(std::move(penalties), std::move(envelopes)).run();
}

}  // namespace penalty
