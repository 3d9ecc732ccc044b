#include "penalty/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "penalty/error.hpp"

namespace penalty {

namespace {

std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_over(const PenaltyKB& pk, const Vocabulary& over, std::size_t cap) {
  if (!over.includes(pk.vocabulary())) {
    throw VocabularyError("search vocabulary does not include the knowledge base vocabulary");
  }
  check_enumeration_cap(over, cap);
}

std::vector<Interpretation> to_interpretations(const Vocabulary& v,
                                               std::vector<std::uint64_t> codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  std::vector<Interpretation> out;
  out.reserve(codes.size());
  for (auto c : codes) out.emplace_back(v, c);
  return out;
}

// Every interpretation costs +inf when the hard core is inconsistent.
SolveResult all_infinite(const Vocabulary& v, WitnessMode mode) {
  SolveResult r;
  r.optimum = Cost::infinite();
  if (mode == WitnessMode::kOne) {
    r.witnesses.emplace_back(v, 0);
  } else {
    for (auto w : InterpretationRange(v)) r.witnesses.push_back(w);
  }
  return r;
}

// Depth-first branch and bound. The lower bound at a node is the penalty of
// the items already false under Kleene evaluation; Kleene evaluation is
// monotone under extension so the bound never exceeds any completion's cost.
class BranchAndBound {
 public:
  BranchAndBound(const PenaltyKB& pk, const Vocabulary& v, const SearchConfig& cfg)
      : v_(v), cfg_(cfg) {
    formulas_.reserve(pk.size());
    for (const auto& item : pk.items()) {
      formulas_.emplace_back(item.formula, v);
      penalties_.push_back(item.penalty.cost());
    }
    order_.resize(v.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (cfg.variable_order == VariableOrder::kFrequency) {
      std::vector<std::size_t> freq(v.size(), 0);
      for (const auto& item : pk.items()) {
        for (const auto& a : item.formula.atoms()) ++freq[*v.index_of(a)];
      }
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return freq[a] > freq[b]; });
    }
  }

  SolveResult run() {
    std::vector<std::uint32_t> open(formulas_.size());
    std::iota(open.begin(), open.end(), std::uint32_t{0});

    phase_ = Phase::kOptimize;
    search(0, 0, 0, open, Cost::zero());

    if (cfg_.witness_mode == WitnessMode::kOne) {
      // Second pass in vocabulary order, false first: the first leaf within
      // the optimum is the lexicographically smallest witness.
      phase_ = Phase::kFirstLex;
      std::iota(order_.begin(), order_.end(), std::size_t{0});
      found_.clear();
      search(0, 0, 0, open, Cost::zero());
    }

    SolveResult r;
    r.optimum = incumbent_;
    r.witnesses = to_interpretations(v_, std::move(found_));
    r.nodes_explored = nodes_;
    return r;
  }

 private:
  enum class Phase { kOptimize, kFirstLex };

  bool pruned(const Cost& bound) const {
    if (bound.is_infinite()) return true;
    if (phase_ == Phase::kFirstLex) return done_ || bound > incumbent_;
    if (!have_incumbent_) return false;
    return cfg_.witness_mode == WitnessMode::kOne ? bound >= incumbent_ : bound > incumbent_;
  }

  void search(std::size_t depth, std::uint64_t assigned, std::uint64_t values,
              const std::vector<std::uint32_t>& open, Cost bound) {
    ++nodes_;
    std::vector<std::uint32_t> still_open;
    still_open.reserve(open.size());
    for (auto i : open) {
      switch (formulas_[i].evaluate(assigned, values)) {
        case Truth::kFalse: bound += penalties_[i]; break;
        case Truth::kUnknown: still_open.push_back(i); break;
        case Truth::kTrue: break;
      }
    }
    if (cfg_.on_node) cfg_.on_node(PartialAssignment(v_, assigned, values), bound);
    if (pruned(bound)) return;

    // Once every item is decided, all completions share the same cost.
    if (still_open.empty() || depth == order_.size()) {
      record(bound, assigned, values);
      return;
    }
    const std::uint64_t bit = atom_bit(order_[depth], v_.size());
    search(depth + 1, assigned | bit, values, still_open, bound);
    search(depth + 1, assigned | bit, values | bit, still_open, bound);
  }

  void record(const Cost& cost, std::uint64_t assigned, std::uint64_t values) {
    if (phase_ == Phase::kFirstLex) {
      found_.push_back(values);
      done_ = true;
      return;
    }
    if (!have_incumbent_ || cost < incumbent_) {
      have_incumbent_ = true;
      incumbent_ = cost;
      found_.clear();
    }
    if (cfg_.witness_mode == WitnessMode::kAll) {
      const std::uint64_t free = full_mask(v_.size()) & ~assigned;
      std::uint64_t sub = free;
      while (true) {
        found_.push_back(values | sub);
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
    }
  }

  const Vocabulary& v_;
  const SearchConfig& cfg_;
  std::vector<CompiledFormula> formulas_;
  std::vector<Cost> penalties_;
  std::vector<std::size_t> order_;

  Phase phase_ = Phase::kOptimize;
  bool have_incumbent_ = false;
  bool done_ = false;
  Cost incumbent_;
  std::vector<std::uint64_t> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult min_cost_interpretations(const PenaltyKB& pk, const SearchConfig& cfg) {
  return min_cost_interpretations(pk, pk.vocabulary(), cfg);
}

SolveResult min_cost_interpretations(const PenaltyKB& pk, const Vocabulary& over,
                                     const SearchConfig& cfg) {
  check_over(pk, over, cfg.cap);
  const auto hard = hard_core(pk);
  if (!is_consistent(hard, cfg.cap)) return all_infinite(over, cfg.witness_mode);
  return BranchAndBound(pk, over, cfg).run();
}

SolveResult brute_force_min_cost(const PenaltyKB& pk, const SearchConfig& cfg) {
  return brute_force_min_cost(pk, pk.vocabulary(), cfg);
}

SolveResult brute_force_min_cost(const PenaltyKB& pk, const Vocabulary& over,
                                 const SearchConfig& cfg) {
  check_over(pk, over, cfg.cap);
  const CompiledKB compiled(pk, over);
  SolveResult r;
  bool first = true;
  std::vector<std::uint64_t> best;
  const std::uint64_t n = std::uint64_t{1} << over.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    ++r.nodes_explored;
    Cost c = compiled.cost(code);
    if (first || c < r.optimum) {
      first = false;
      r.optimum = c;
      best.clear();
    }
    if (c == r.optimum && (cfg.witness_mode == WitnessMode::kAll || best.empty())) {
      best.push_back(code);
    }
  }
  r.witnesses = to_interpretations(over, std::move(best));
  return r;
}

Cost consistency_cost(const PenaltyKB& pk, const Formula& f, std::size_t cap) {
  SearchConfig cfg;
  cfg.witness_mode = WitnessMode::kOne;
  cfg.cap = cap;
  return min_cost_interpretations(add_hard(pk, f), cfg).optimum;
}

namespace {

// Enumerates subsets of pk's items that are consistent with `f`, keeping the
// cheapest. A subset is f-consistent iff it is contained in the satisfied
// set of some model of f, so the distinct satisfied sets of the models are
// the only consistency information needed.
class SubsetSearch {
 public:
  SubsetSearch(const PenaltyKB& pk, const Formula& f, std::size_t cap, std::size_t subset_cap) {
    if (pk.size() > subset_cap) {
      throw CapExceeded("knowledge base of " + std::to_string(pk.size()) +
                        " items exceeds the subset cap of " + std::to_string(subset_cap));
    }
    const Vocabulary v = pk.vocabulary().merged_with(Vocabulary::of(f));
    check_enumeration_cap(v, cap);
    const CompiledKB compiled(pk, v);
    const CompiledFormula premise(f, v);
    const std::uint64_t n = std::uint64_t{1} << v.size();
    for (std::uint64_t code = 0; code < n; ++code) {
      if (premise.evaluate(code)) envelopes_.push_back(compiled.satisfied_positions(code));
    }
    std::sort(envelopes_.begin(), envelopes_.end());
    envelopes_.erase(std::unique(envelopes_.begin(), envelopes_.end()), envelopes_.end());
    for (const auto& item : pk.items()) penalties_.push_back(item.penalty.cost());
  }

  std::vector<std::uint64_t> run() {
    if (!envelopes_.empty()) search(0, 0, envelopes_, Cost::zero());
    return std::move(best_);
  }

 private:
  void search(std::size_t i, std::uint64_t included, const std::vector<std::uint64_t>& envelopes,
              const Cost& excluded) {
    if (have_best_ && excluded > best_cost_) return;
    if (i == penalties_.size()) {
      if (!have_best_ || excluded < best_cost_) {
        have_best_ = true;
        best_cost_ = excluded;
        best_.clear();
      }
      best_.push_back(included);
      return;
    }
    const std::uint64_t bit = std::uint64_t{1} << i;
    std::vector<std::uint64_t> with;
    for (auto e : envelopes) {
      if (e & bit) with.push_back(e);
    }
    if (!with.empty()) search(i + 1, included | bit, with, excluded);
    search(i + 1, included, envelopes, excluded + penalties_[i]);
  }

  std::vector<std::uint64_t> envelopes_;
  std::vector<Cost> penalties_;
  bool have_best_ = false;
  Cost best_cost_;
  std::vector<std::uint64_t> best_;
};

std::vector<SubTheory> to_subtheories(const PenaltyKB& pk, const std::vector<std::uint64_t>& sets) {
  std::vector<SubTheory> out;
  out.reserve(sets.size());
  for (auto s : sets) out.push_back(SubTheory::from_positions(pk, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SubTheory> preferred_subtheories(const PenaltyKB& pk, std::size_t cap,
                                             std::size_t subset_cap) {
  return phi_preferred_subtheories(pk, Formula::top(), cap, subset_cap);
}

std::vector<SubTheory> phi_preferred_subtheories(const PenaltyKB& pk, const Formula& f,
                                                 std::size_t cap, std::size_t subset_cap) {
  return to_subtheories(pk, SubsetSearch(pk, f, cap, subset_cap).run());
}

}  // namespace penalty
