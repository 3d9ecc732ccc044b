#ifndef PENALTY_TESTS_PROPERTIES_HPP
#define PENALTY_TESTS_PROPERTIES_HPP

// Invariant checks shared by the property suite and the acceptance binary.
// Each returns an empty string when the invariant holds and a description of
// the failing case otherwise.

#include <cmath>
#include <sstream>
#include <string>

#include "support.hpp"

namespace penalty::props {

using testing::oracle_consistency_cost;
using testing::OracleCost;

using Check = std::string;

template <typename... Parts>
Check fail(const PenaltyKB& pk, const Parts&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  os << "\nin knowledge base:\n" << format_kb(pk);
  return os.str();
}

inline std::vector<std::uint64_t> all_subsets(const PenaltyKB& pk) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << pk.size()); ++s) out.push_back(s);
  return out;
}

inline bool subset_consistent(const PenaltyKB& pk, std::uint64_t s) {
  return is_consistent(formulas_of(pk, SubTheory::from_positions(pk, s)));
}

// ---------------------------------------------------------------------------
// Costs and sub-theories

/// K(F) = inf and K(T) = min over all interpretations.
inline Check top_cost_is_minimum(const PenaltyKB& pk) {
  if (consistency_cost(pk, Formula::bottom()) != Cost::infinite()) return fail(pk, "K(F) finite");
  const Cost top = consistency_cost(pk, Formula::top());
  if (top != min_cost_interpretations(pk).optimum) return fail(pk, "K(T) differs from the optimum");
  if (top != oracle_consistency_cost(pk, Formula::top()).to_cost()) return fail(pk, "K(T) differs from oracle");
  return {};
}

/// K(T) = inf iff the infinitely penalized formulas are inconsistent.
inline Check infinite_iff_hard_core_inconsistent(const PenaltyKB& pk) {
  const bool infinite = consistency_cost(pk, Formula::top()).is_infinite();
  if (infinite == is_consistent(hard_core(pk))) return fail(pk, "K(T) = inf disagrees with hard core");
  return {};
}

/// K(T) = 0 iff the base is consistent.
inline Check zero_iff_consistent(const PenaltyKB& pk) {
  const bool zero = consistency_cost(pk, Formula::top()) == Cost::zero();
  if (zero != is_consistent(pk.formulas())) return fail(pk, "K(T) = 0 disagrees with consistency");
  return {};
}

/// f |= g implies K(f) >= K(g); also checked on f & g |= f and f |= f | g.
inline Check entailment_antitone(const PenaltyKB& pk, const Formula& f, const Formula& g) {
  const std::pair<Formula, Formula> pairs[] = {
      {f, g}, {Formula::conjunction(f, g), f}, {f, Formula::disjunction(f, g)}};
  for (const auto& [x, y] : pairs) {
    if (entails(x, y) && consistency_cost(pk, x) < consistency_cost(pk, y)) {
      return fail(pk, "K(", x, ") < K(", y, ") although ", x, " |= ", y);
    }
  }
  return {};
}

inline Check connective_bounds(const PenaltyKB& pk, const Formula& f, const Formula& g) {
  const Cost kf = consistency_cost(pk, f);
  const Cost kg = consistency_cost(pk, g);
  if (consistency_cost(pk, Formula::conjunction(f, g)) < std::max(kf, kg)) {
    return fail(pk, "K(f & g) < max for f = ", f, ", g = ", g);
  }
  if (consistency_cost(pk, Formula::disjunction(f, g)) != std::min(kf, kg)) {
    return fail(pk, "K(f | g) != min for f = ", f, ", g = ", g);
  }
  const Cost kt = consistency_cost(pk, Formula::top());
  if (!(kt <= kf) || !(kf <= consistency_cost(pk, Formula::bottom()))) {
    return fail(pk, "K(T) <= K(f) <= K(F) fails for f = ", f);
  }
  return {};
}

/// With K(T) finite, preferred sub-theories are maximal consistent.
inline Check preferred_are_maximal(const PenaltyKB& pk) {
  if (consistency_cost(pk, Formula::top()).is_infinite()) return {};
  for (const auto& a : preferred_subtheories(pk)) {
    const std::uint64_t mask = testing::positions_mask(pk, a);
    for (std::size_t i = 0; i < pk.size(); ++i) {
      const std::uint64_t bigger = mask | std::uint64_t{1} << i;
      if (bigger != mask && subset_consistent(pk, bigger)) {
        return fail(pk, "preferred sub-theory ", mask, " extends consistently by item ", i + 1);
      }
    }
  }
  return {};
}

/// k(w) = C(items satisfied by w).
inline Check cost_of_satisfied_items(const PenaltyKB& pk) {
  for (const auto& w : enumerate_interpretations(pk.vocabulary())) {
    if (interpretation_cost(pk, w) != subtheory_cost(pk, satisfied_by(pk, w))) {
      return fail(pk, "k(w) != C(PK & [w]) at ", w);
    }
  }
  return {};
}

/// K(f) = K_{Add(PK, f)}(T).
inline Check hard_addition(const PenaltyKB& pk, const Formula& f) {
  const Cost k = consistency_cost(pk, f);
  const Vocabulary v = pk.vocabulary().merged_with(Vocabulary::of(f));
  if (k != min_cost_interpretations(add_hard(pk, f), v).optimum) return fail(pk, "K(f) != K_Add(T), f = ", f);
  if (k != oracle_consistency_cost(pk, f).to_cost()) return fail(pk, "K(f) differs from oracle, f = ", f);
  return {};
}

/// w is optimal iff PK & [w] is a preferred sub-theory.
inline Check optimal_iff_preferred(const PenaltyKB& pk) {
  const SolveResult r = min_cost_interpretations(pk);
  const auto preferred = preferred_subtheories(pk);
  for (const auto& w : enumerate_interpretations(pk.vocabulary())) {
    const bool optimal = std::binary_search(r.witnesses.begin(), r.witnesses.end(), w);
    const bool pref = std::find(preferred.begin(), preferred.end(), satisfied_by(pk, w)) != preferred.end();
    if (optimal != pref) return fail(pk, "optimality and preferred sub-theory disagree at ", w);
  }
  return {};
}

/// Every model of a maximal consistent A costs C(A).
inline Check maximal_models_cost(const PenaltyKB& pk) {
  const Vocabulary& v = pk.vocabulary();
  for (auto s : all_subsets(pk)) {
    if (!subset_consistent(pk, s)) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < pk.size() && maximal; ++i) {
      const std::uint64_t bigger = s | std::uint64_t{1} << i;
      if (bigger != s && subset_consistent(pk, bigger)) maximal = false;
    }
    if (!maximal) continue;
    const SubTheory a = SubTheory::from_positions(pk, s);
    const Formula conj = conjoin(formulas_of(pk, a));
    const Cost c = subtheory_cost(pk, a);
    for (const auto& w : enumerate_interpretations(v)) {
      if (evaluate(conj, w) && interpretation_cost(pk, w) != c) {
        return fail(pk, "model ", w, " of maximal sub-theory ", s, " costs ", interpretation_cost(pk, w));
      }
    }
  }
  return {};
}

/// K(f) = least cost of an f-consistent sub-theory, and the f-preferred
/// sub-theories are exactly the cheapest f-consistent ones.
inline Check cheapest_consistent_subtheory(const PenaltyKB& pk, const Formula& f) {
  const auto expected = testing::oracle_preferred_subsets(pk, f);
  const auto got = phi_preferred_subtheories(pk, f);
  if (testing::masks(pk, got) != expected) return fail(pk, "f-preferred sub-theories differ from oracle, f = ", f);
  const Cost k = consistency_cost(pk, f);
  const Cost least = got.empty() ? Cost::infinite() : subtheory_cost(pk, got.front());
  if (k != least) return fail(pk, "K(f) = ", k, " but cheapest f-consistent sub-theory costs ", least, ", f = ", f);
  return {};
}

/// A is preferred iff A is consistent and C(A) = K(T).
inline Check preferred_characterization(const PenaltyKB& pk) {
  const Cost kt = consistency_cost(pk, Formula::top());
  const auto preferred = testing::masks(pk, preferred_subtheories(pk));
  for (auto s : all_subsets(pk)) {
    const bool pref = std::binary_search(preferred.begin(), preferred.end(), s);
    const bool characterized =
        subset_consistent(pk, s) && subtheory_cost(pk, SubTheory::from_positions(pk, s)) == kt;
    if (pref != characterized) return fail(pk, "sub-theory ", s, " preferred = ", pref);
  }
  return {};
}

/// Equivalent bases have formula conjunctions related by entailment.
inline Check equivalent_conjunctions(const PenaltyKB& pk, const PenaltyKB& other) {
  if (!semantically_equivalent(pk, other)) return {};
  if (!entails(conjoin(pk.formulas()), conjoin(other.formulas()))) {
    return fail(pk, "equivalent to\n", format_kb(other), "but the conjunction does not entail it");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Solver

/// Branch and bound, exhaustive enumeration and the independent oracle agree.
inline Check oracle_equivalence(const PenaltyKB& pk) {
  const SolveResult bb = min_cost_interpretations(pk);
  const SolveResult bf = brute_force_min_cost(pk);
  if (bb.optimum != bf.optimum) return fail(pk, "optimum ", bb.optimum, " vs ", bf.optimum);
  if (bb.witnesses != bf.witnesses) return fail(pk, "witness sets differ");
  SearchConfig lex;
  lex.variable_order = VariableOrder::kLexicographic;
  if (min_cost_interpretations(pk, lex).witnesses != bf.witnesses) return fail(pk, "lexicographic order differs");
  SearchConfig one;
  one.witness_mode = WitnessMode::kOne;
  const SolveResult first = min_cost_interpretations(pk, one);
  if (first.optimum != bf.optimum || first.witnesses.size() != 1 || first.witnesses[0] != bf.witnesses[0]) {
    return fail(pk, "one-mode witness is not the smallest optimal interpretation");
  }
  return {};
}

/// The committed penalty at each node never exceeds any completion's cost.
inline Check admissible_bound(const PenaltyKB& pk) {
  const Vocabulary& v = pk.vocabulary();
  const auto table = cost_table(pk, v);
  Check out;
  SearchConfig cfg;
  cfg.on_node = [&](const PartialAssignment& p, const Cost& bound) {
    if (!out.empty()) return;
    for (const auto& w : enumerate_interpretations(v)) {
      bool extends = true;
      for (std::size_t i = 0; i < v.size() && extends; ++i) {
        const auto b = p.value(*p.vocabulary().index_of(v[i]));
        if (b && *b != w.value(i)) extends = false;
      }
      if (extends && table[w.code()] < bound) {
        out = fail(pk, "bound ", bound, " above completion cost ", table[w.code()], " at ", w);
        return;
      }
    }
  };
  min_cost_interpretations(pk, cfg);
  return out;
}

// ---------------------------------------------------------------------------
// Inference

/// Model-side, exhaustive and sub-theory consequence agree.
inline Check consequence_paths_agree(const PenaltyKB& pk, const Formula& f, const Formula& g) {
  const Query q{f, g};
  const bool model = nm_entails(pk, q);
  if (model != nm_entails_brute_force(pk, q)) return fail(pk, "branch and bound vs brute force on ", f, " |~ ", g);
  if (model != nm_entails_by_subtheories(pk, q)) return fail(pk, "models vs sub-theories on ", f, " |~ ", g);
  return {};
}

/// f |~ g iff f |= g or T |~ g in Add(PK, f), for satisfiable f.
inline Check reduction_holds(const PenaltyKB& pk, const Formula& f, const Formula& g) {
  if (!is_satisfiable(f)) return {};
  const ReductionCheck r = reduction_check(pk, {f, g});
  if (!r.holds()) return fail(pk, "reduction fails on ", f, " |~ ", g);
  return {};
}

/// With K(f) infinite every model of f is preferred.
inline Check infinite_premise(const PenaltyKB& pk, const Formula& f, const Formula& g) {
  if (!consistency_cost(pk, f).is_infinite()) return {};
  if (nm_entails(pk, {f, g}) != entails(f, g)) return fail(pk, "K(f) = inf but |~ differs from |= on ", f, ", ", g);
  return {};
}

inline Check postulates(const PenaltyKB& pk, const std::vector<Formula>& samples) {
  const PostulateReport report = check_postulates(pk, samples);
  for (const auto& c : report.counterexamples) {
    if (!violates(pk, c)) return fail(pk, "reported counterexample does not replay: ", describe(c));
  }
  if (!report.all_pass()) return fail(pk, describe(report.counterexamples.front()));
  return {};
}

// ---------------------------------------------------------------------------
// Belief functions

inline Check contour_identity(const PenaltyKB& pk, double tol) {
  const double deviation = check_contour_identity(pk);
  if (!(deviation <= tol)) return fail(pk, "contour deviation ", deviation);
  const MassFunction m = kb_mass(pk);
  for (const auto& w : enumerate_interpretations(pk.vocabulary())) {
    const Cost k = interpretation_cost(pk, w);
    const double pl = contour(m, w);
    if (k.is_infinite() && pl != 0.0) return fail(pk, "positive contour ", pl, " at infinite cost ", w);
    double product = 1;
    for (const auto& item : pk.items()) {
      if (!evaluate(item.formula, w)) product *= item.penalty.is_infinite() ? 0.0 : std::exp(-item.penalty.to_double());
    }
    if (std::abs(product - pl) > tol) return fail(pk, "contour ", pl, " differs from product ", product, " at ", w);
  }
  return {};
}

inline Check mass_conservation(const PenaltyKB& pk) {
  const MassFunction m = kb_mass(pk);
  if (std::abs(m.total() - 1) > 1e-12) return fail(pk, "total mass ", m.total());
  for (const auto& fe : m.focal_elements()) {
    if (!(fe.mass > 0)) return fail(pk, "non-positive focal mass on ", fe.formula);
  }
  return {};
}

/// Exponent equals K(f); multiplicity is positive when the exponent is finite.
inline Check leading_order(const PenaltyKB& pk, const Formula& f) {
  const OrderOfMagnitude r = infinitesimal_plausibility(pk, f);
  const Cost k = consistency_cost(pk, f);
  if (r.exponent != k) return fail(pk, "exponent ", r.exponent, " vs K = ", k, " for ", f);
  if (r.exponent.is_finite() && is_satisfiable(f) && r.multiplicity < 1) {
    return fail(pk, "zero multiplicity with finite exponent for ", f);
  }
  if (r.exponent.is_infinite() && r.multiplicity != 0) return fail(pk, "multiplicity with infinite exponent");
  return {};
}

inline Check plausibility_matches(const PenaltyKB& pk, const Formula& f) {
  const double pl = plausibility(kb_mass(pk), f);
  const double expected = testing::oracle_plausibility(pk, f);
  if (std::abs(pl - expected) > 1e-9) return fail(pk, "Pl(", f, ") = ", pl, ", expansion gives ", expected);
  return {};
}

// ---------------------------------------------------------------------------
// Encoders

/// Optimal interpretations of the encoding are exactly the maximum cliques.
inline Check clique_encoding(const Graph& g) {
  const PenaltyKB pk = encode_max_clique(g);
  const auto cliques = testing::oracle_max_cliques(g);
  const SolveResult r = min_cost_interpretations(pk);
  std::set<std::vector<std::string>> decoded;
  for (const auto& w : r.witnesses) {
    auto vs = decode_clique(g, w);
    std::sort(vs.begin(), vs.end());
    decoded.insert(vs);
  }
  if (decoded != cliques) return fail(pk, "decoded witnesses differ from maximum cliques");
  const std::size_t size = cliques.begin()->size();
  if (r.optimum != Cost::finite(Rational(static_cast<long>(g.vertex_count() - size)))) {
    return fail(pk, "optimum ", r.optimum, " but maximum clique has ", size, " vertices");
  }
  for (const auto& c : cliques) {
    const Interpretation w = Interpretation::from_true_atoms(pk.vocabulary(), c);
    if (interpretation_cost(pk, w) != r.optimum) return fail(pk, "maximum clique indicator is not optimal");
  }
  return {};
}

// ---------------------------------------------------------------------------
// Logic

inline Check logic_kernel(const Formula& f, const Formula& g, testing::Gen& gen) {
  const Vocabulary v = Vocabulary::of(f).merged_with(Vocabulary::of(g));
  std::ostringstream os;
  if (!(parse_formula(f.to_string()) == f)) os << "round trip fails for " << f;
  const CompiledFormula compiled(f, v);
  std::set<std::string> names(v.begin(), v.end());
  for (const auto& w : enumerate_interpretations(v)) {
    testing::World world;
    for (std::size_t i = 0; i < v.size(); ++i) world[v[i]] = w.value(i);
    const bool expected = testing::oracle_eval(f, world);
    if (evaluate(f, w) != expected || compiled.evaluate(w.code()) != expected) os << "evaluation of " << f << " at " << w;
    if (partial_evaluate(f, PartialAssignment(w)) != (expected ? Truth::kTrue : Truth::kFalse)) {
      os << "partial evaluation on total " << w;
    }
  }
  if (!v.empty()) {
    PartialAssignment p(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (gen.coin()) p = p.with(i, gen.coin());
    }
    const Truth t = partial_evaluate(f, p);
    if (t != Truth::kUnknown) {
      for (int k = 0; k < 8; ++k) {
        std::vector<std::string> on;
        for (std::size_t i = 0; i < v.size(); ++i) {
          const auto b = p.value(i);
          if (b ? *b : gen.coin()) on.push_back(v[i]);
        }
        const bool value = evaluate(f, Interpretation::from_true_atoms(v, on));
        if (value != (t == Truth::kTrue)) os << "Kleene value " << t << " of " << f << " unsound";
      }
    }
  }
  const bool same_table = truth_table(f, v) == truth_table(g, v);
  if ((entails(f, g) && entails(g, f)) != same_table) os << "mutual entailment vs truth tables on " << f << ", " << g;
  const Formula c = canonicalize(f);
  if (!equivalent(c, f)) os << "canonical form not equivalent for " << f;
  if (!(canonicalize(c) == c)) os << "canonicalize not idempotent on " << f;
  return os.str();
}

// ---------------------------------------------------------------------------
// Knowledge bases

inline Check kb_kernel(const PenaltyKB& pk, const Formula& extra, testing::Gen& gen) {
  for (auto mode : {MergeMode::kSyntactic, MergeMode::kSemantic}) {
    if (!semantically_equivalent(pk, normalize(pk, mode))) return fail(pk, "normalize changes the cost function");
  }
  if (!less_expensive(pk, pk)) return fail(pk, "<< not reflexive");
  const PenaltyKB grown = pk.with_item(extra, gen.penalty(9, 0.1));
  const PenaltyKB third = grown.with_item(gen.item_formula(4, 2), gen.penalty(9, 0.1));
  if (!less_expensive(pk, grown)) return fail(pk, "adding ", extra, " lowers some cost");
  if (less_expensive(pk, grown) && less_expensive(grown, third) && !less_expensive(pk, third)) {
    return fail(pk, "<< not transitive");
  }
  const Vocabulary wide = pk.vocabulary().merged_with(Vocabulary({"x", "y"}));
  for (const auto& w : enumerate_interpretations(wide)) {
    testing::World world;
    for (std::size_t i = 0; i < wide.size(); ++i) world[wide[i]] = w.value(i);
    const Cost c = interpretation_cost(pk, w);
    if (c != testing::oracle_cost(pk, world).to_cost()) return fail(pk, "k(w) differs from oracle at ", w);
    std::vector<std::string> on;
    for (const auto& name : pk.vocabulary()) {
      if (world[name]) on.push_back(name);
    }
    if (c != interpretation_cost(pk, Interpretation::from_true_atoms(pk.vocabulary(), on))) {
      return fail(pk, "k(w) depends on atoms outside the base at ", w);
    }
  }
  if (auto out = equivalent_conjunctions(pk, normalize(pk, MergeMode::kSemantic)); !out.empty()) return out;
  return equivalent_conjunctions(pk, grown);
}

// ---------------------------------------------------------------------------
// Belief and encoders, continued

inline Check combine_laws(const MassFunction& a, const MassFunction& b, const MassFunction& c,
                          const Vocabulary& v) {
  auto same = [&](const MassFunction& x, const MassFunction& y) {
    const MassFunction mx = merge_equivalent_focals(x, v);
    const MassFunction my = merge_equivalent_focals(y, v);
    if (mx.size() != my.size()) return false;
    for (const auto& fe : mx.focal_elements()) {
      if (std::abs(fe.mass - my.mass(fe.formula)) > 1e-12) return false;
    }
    return true;
  };
  std::ostringstream os;
  if (!same(combine(a, b), combine(b, a))) os << "combination not commutative";
  if (!same(combine(combine(a, b), c), combine(a, combine(b, c)))) os << "combination not associative";
  if (std::abs(combine(a, b).total() - 1) > 1e-12) os << "combination loses mass";
  return os.str();
}

/// Equivalent bases induce the same contour and leading orders.
inline Check equivalence_transfer(const PenaltyKB& pk, const Formula& f) {
  const PenaltyKB other = normalize(pk, MergeMode::kSemantic);
  const Vocabulary v = pk.vocabulary();
  const MassFunction m1 = kb_mass(pk);
  const MassFunction m2 = kb_mass(other);
  for (const auto& w : enumerate_interpretations(v)) {
    const double c1 = contour(m1, w);
    const double c2 = contour(m2, w);
    if (std::abs(c1 - c2) > 1e-9) return fail(pk, "contours of equivalent bases differ at ", w);
  }
  if (infinitesimal_plausibility(pk, f).exponent != infinitesimal_plausibility(other, f).exponent) {
    return fail(pk, "exponents of equivalent bases differ for ", f);
  }
  return {};
}

inline Check wcnf_round_trip(const PenaltyKB& pk) {
  const PenaltyKB back = import_wcnf(export_wcnf(pk));
  if (!semantically_equivalent(pk, back)) return fail(pk, "WCNF round trip changes costs");
  return {};
}

// ---------------------------------------------------------------------------
// Suite

struct SuiteResult {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  void record(const std::string& name, const Check& c) {
    ++checks;
    if (!c.empty() && failures.size() < 20) failures.push_back(name + ": " + c);
  }
};

/// Runs every invariant on `instances` random cases per group.
inline SuiteResult run_suite(std::uint64_t seed, int instances) {
  testing::Gen gen(seed);
  SuiteResult r;
  for (int i = 0; i < instances; ++i) {
    const Formula f = gen.formula(4, 3);
    const Formula g = gen.formula(4, 3);
    r.record("logic", logic_kernel(f, g, gen));

    // Fewer atoms than items makes conflicts common.
    const PenaltyKB pk = i % 2 ? gen.conflict_kb(8, 3, 20, 0.15) : gen.kb(6, 4, 20, 0.15);
    const Formula q = gen.formula(5, 2);
    const Formula q2 = gen.formula(4, 2);
    r.record("kb", kb_kernel(pk, gen.item_formula(4, 2), gen));
    r.record("minimum over interpretations", top_cost_is_minimum(pk));
    r.record("hard core", infinite_iff_hard_core_inconsistent(pk));
    r.record("zero cost", zero_iff_consistent(pk));
    r.record("entailment monotone", entailment_antitone(pk, q, q2));
    r.record("connectives", connective_bounds(pk, q, q2));
    r.record("maximality", preferred_are_maximal(pk));
    r.record("cost via satisfied items", cost_of_satisfied_items(pk));
    r.record("hard addition", hard_addition(pk, q));
    r.record("optimal iff preferred", optimal_iff_preferred(pk));
    r.record("maximal sub-theory models", maximal_models_cost(pk));
    r.record("cheapest consistent sub-theory", cheapest_consistent_subtheory(pk, q));
    r.record("preferred characterization", preferred_characterization(pk));
    r.record("oracle equivalence", oracle_equivalence(pk));
    r.record("admissible bound", admissible_bound(pk));

    r.record("consequence paths", consequence_paths_agree(pk, q, q2));
    r.record("reduction", reduction_holds(pk, q, q2));
    r.record("infinite premise", infinite_premise(pk, q, q2));

    r.record("contour", contour_identity(pk, 1e-9));
    r.record("mass", mass_conservation(pk));
    r.record("leading order", leading_order(pk, q));
    r.record("plausibility", plausibility_matches(pk, q));
    r.record("equivalence transfer", equivalence_transfer(pk, q));
    const Vocabulary v = Vocabulary::of(std::vector<Formula>{f, g, q});
    r.record("combination", combine_laws(simple_support(f, gen.penalty(5, 0.1)), simple_support(g, gen.penalty(5, 0.1)),
                                         simple_support(q, gen.penalty(5, 0.1)), v));

    r.record("clique", clique_encoding(gen.graph(7, 0.5)));
    r.record("wcnf", wcnf_round_trip(gen.clausal_kb(6, 4, 20, 0.15)));
  }
  return r;
}

}  // namespace penalty::props

#endif  // PENALTY_TESTS_PROPERTIES_HPP
