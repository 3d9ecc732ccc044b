#include "penalty/inference.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "penalty/error.hpp"

namespace penalty {

namespace {

Vocabulary query_vocabulary(const PenaltyKB& pk, const Query& q) {
  const Formula fs[] = {q.premise, q.conclusion};
  return pk.vocabulary().merged_with(Vocabulary::of(fs));
}

std::vector<Interpretation> models_only(const Formula& premise, std::vector<Interpretation> ws) {
  if (ws.empty()) return ws;
  const CompiledFormula compiled(premise, ws.front().vocabulary());
  std::erase_if(ws, [&](const Interpretation& w) { return !compiled.evaluate(w.code()); });
  return ws;
}

bool all_satisfy(const std::vector<Interpretation>& ws, const Formula& f, const Vocabulary& v) {
  const CompiledFormula compiled(f, v);
  return std::all_of(ws.begin(), ws.end(),
                     [&](const Interpretation& w) { return compiled.evaluate(w.code()); });
}

}  // namespace

std::vector<Interpretation> preferred_models(const PenaltyKB& pk, const Formula& premise,
                                             const Vocabulary& over, std::size_t cap) {
  SearchConfig cfg;
  cfg.cap = cap;
  // When no model of the premise has finite cost, every interpretation of the
  // hardened base ties at +inf; filtering leaves exactly the premise's models.
  auto r = min_cost_interpretations(add_hard(pk, premise), over, cfg);
  return models_only(premise, std::move(r.witnesses));
}

bool nm_entails(const PenaltyKB& pk, const Query& q, std::size_t cap) {
  const Vocabulary v = query_vocabulary(pk, q);
  return all_satisfy(preferred_models(pk, q.premise, v, cap), q.conclusion, v);
}

bool nm_entails_brute_force(const PenaltyKB& pk, const Query& q, std::size_t cap) {
  const Vocabulary v = query_vocabulary(pk, q);
  SearchConfig cfg;
  cfg.cap = cap;
  auto r = brute_force_min_cost(add_hard(pk, q.premise), v, cfg);
  return all_satisfy(models_only(q.premise, std::move(r.witnesses)), q.conclusion, v);
}

bool nm_entails_by_subtheories(const PenaltyKB& pk, const Query& q, std::size_t cap,
                               std::size_t subset_cap) {
  for (const auto& a : phi_preferred_subtheories(pk, q.premise, cap, subset_cap)) {
    auto fs = formulas_of(pk, a);
    fs.push_back(q.premise);
    if (!entails(conjoin(fs), q.conclusion, cap)) return false;
  }
  return true;
}

ReductionCheck reduction_check(const PenaltyKB& pk, const Query& q, std::size_t cap) {
  if (!is_satisfiable(q.premise, cap)) {
    throw std::invalid_argument("reduction_check: premise is unsatisfiable");
  }
  ReductionCheck r;
  r.direct = nm_entails(pk, q, cap);
  r.reduced = entails(q.premise, q.conclusion, cap) ||
              nm_entails(add_hard(pk, q.premise), Query{Formula::top(), q.conclusion}, cap);
  return r;
}

// ---------------------------------------------------------------------------
// Postulates.

std::string_view postulate_name(Postulate p) {
  switch (p) {
    case Postulate::kReflexivity: return "Reflexivity";
    case Postulate::kLeftLogicalEquivalence: return "Left Logical Equivalence";
    case Postulate::kRightWeakening: return "Right Weakening";
    case Postulate::kAnd: return "And";
    case Postulate::kOr: return "Or";
    case Postulate::kCautiousMonotony: return "Cautious Monotony";
    case Postulate::kCut: return "Cut";
    case Postulate::kRationalMonotony: return "Rational Monotony";
    case Postulate::kSupraclassicality: return "Supraclassicality";
  }
  return "?";
}

namespace {

int arity(Postulate p) {
  switch (p) {
    case Postulate::kReflexivity: return 1;
    case Postulate::kSupraclassicality: return 2;
    default: return 3;
  }
}

// nm(x, y): x |~ y.  cl(x, y): x |= y.
template <typename Nm, typename Cl>
bool instance_holds(const PostulateInstance& in, Nm&& nm, Cl&& cl) {
  const Formula& a = in.a;
  const Formula& b = in.b;
  const Formula& c = in.c;
  switch (in.postulate) {
    case Postulate::kReflexivity:
      return nm(a, a);
    case Postulate::kLeftLogicalEquivalence:
      return !(cl(a, b) && cl(b, a) && nm(a, c)) || nm(b, c);
    case Postulate::kRightWeakening:
      return !(cl(b, c) && nm(a, b)) || nm(a, c);
    case Postulate::kAnd:
      return !(nm(a, b) && nm(a, c)) || nm(a, Formula::conjunction(b, c));
    case Postulate::kOr:
      return !(nm(a, c) && nm(b, c)) || nm(Formula::disjunction(a, b), c);
    case Postulate::kCautiousMonotony:
      return !(nm(a, b) && nm(a, c)) || nm(Formula::conjunction(a, b), c);
    case Postulate::kCut:
      return !(nm(a, b) && nm(Formula::conjunction(a, b), c)) || nm(a, c);
    case Postulate::kRationalMonotony:
      return !(nm(a, c) && !nm(a, Formula::negation(b))) || nm(Formula::conjunction(a, b), c);
    case Postulate::kSupraclassicality:
      return !cl(a, b) || nm(a, b);
  }
  return false;
}

// Memoizes preferred models per premise and truth tables per formula over
// one shared vocabulary.
class CachedRelation {
 public:
  CachedRelation(const PenaltyKB& pk, Vocabulary v, std::size_t cap)
      : pk_(pk), v_(std::move(v)), cap_(cap) {
    check_enumeration_cap(v_, cap_);
  }

  bool nm(const Formula& premise, const Formula& conclusion) {
    const auto& models = preferred(premise);
    const auto& table = truth(conclusion);
    return std::all_of(models.begin(), models.end(),
                       [&](std::uint64_t code) { return table[code]; });
  }

  bool cl(const Formula& f, const Formula& g) {
    const auto& tf = truth(f);
    const auto& tg = truth(g);
    for (std::size_t i = 0; i < tf.size(); ++i) {
      if (tf[i] && !tg[i]) return false;
    }
    return true;
  }

 private:
  const std::vector<std::uint64_t>& preferred(const Formula& premise) {
    auto key = premise.to_string();
    auto it = models_.find(key);
    if (it != models_.end()) return it->second;
    std::vector<std::uint64_t> codes;
    for (const auto& w : preferred_models(pk_, premise, v_, cap_)) codes.push_back(w.code());
    return models_.emplace(std::move(key), std::move(codes)).first->second;
  }

  const std::vector<bool>& truth(const Formula& f) {
    auto key = f.to_string();
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    return tables_.emplace(std::move(key), truth_table(f, v_, cap_)).first->second;
  }

  const PenaltyKB& pk_;
  Vocabulary v_;
  std::size_t cap_;
  std::map<std::string, std::vector<std::uint64_t>> models_;
  std::map<std::string, std::vector<bool>> tables_;
};

}  // namespace

PostulateReport check_postulates(const PenaltyKB& pk, const std::vector<Formula>& samples,
                                 std::size_t cap) {
  const Vocabulary v = pk.vocabulary().merged_with(Vocabulary::of(samples));
  CachedRelation rel(pk, v, cap);
  auto nm = [&](const Formula& x, const Formula& y) { return rel.nm(x, y); };
  auto cl = [&](const Formula& x, const Formula& y) { return rel.cl(x, y); };

  PostulateReport report;
  auto check = [&](const PostulateInstance& in) {
    auto& tally = report.tallies[static_cast<std::size_t>(in.postulate)];
    ++tally.checked;
    if (!instance_holds(in, nm, cl)) {
      ++tally.failed;
      report.counterexamples.push_back(in);
    }
  };

  for (Postulate p : kAllPostulates) {
    for (const auto& a : samples) {
      if (arity(p) == 1) {
        check({p, a, a, a});
        continue;
      }
      for (const auto& b : samples) {
        if (arity(p) == 2) {
          check({p, a, b, b});
          continue;
        }
        for (const auto& c : samples) check({p, a, b, c});
      }
    }
  }
  return report;
}

bool violates(const PenaltyKB& pk, const PostulateInstance& instance, std::size_t cap) {
  auto nm = [&](const Formula& x, const Formula& y) { return nm_entails(pk, Query{x, y}, cap); };
  auto cl = [&](const Formula& x, const Formula& y) { return entails(x, y, cap); };
  return !instance_holds(instance, nm, cl);
}

std::string describe(const PostulateInstance& instance) {
  std::ostringstream os;
  os << postulate_name(instance.postulate) << ": a = " << instance.a;
  if (arity(instance.postulate) >= 2) os << ", b = " << instance.b;
  if (arity(instance.postulate) >= 3) os << ", c = " << instance.c;
  return os.str();
}

}  // namespace penalty
