#include "penalty/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "penalty/belief.hpp"
#include "penalty/encoders.hpp"
#include "penalty/error.hpp"
#include "penalty/inference.hpp"
#include "penalty/kb.hpp"
#include "penalty/solver.hpp"

namespace penalty::cli {

namespace {

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

// "a b !c": every listed atom is assigned; the vocabulary is the knowledge
// base's plus the listed atoms, and each of those must be listed.
Interpretation parse_world(const std::string& text, const Vocabulary& base) {
  std::istringstream ss(text);
  std::string token;
  std::vector<std::string> names;
  std::vector<std::string> positive;
  while (ss >> token) {
    const bool negated = token.front() == '!';
    std::string name = negated ? token.substr(1) : token;
    if (!is_valid_atom_name(name)) throw std::invalid_argument("invalid atom '" + name + "'");
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw std::invalid_argument("atom '" + name + "' assigned twice");
    }
    names.push_back(name);
    if (!negated) positive.push_back(name);
  }
  const Vocabulary v = base.merged_with(Vocabulary(names));
  for (const auto& atom : v) {
    if (std::find(names.begin(), names.end(), atom) == names.end()) {
      throw std::invalid_argument("world leaves atom '" + atom + "' unassigned");
    }
  }
  return Interpretation::from_true_atoms(v, positive);
}

// "1,2,4": one-based item positions.
SubTheory parse_positions(const std::string& text, const PenaltyKB& pk) {
  std::uint64_t mask = 0;
  std::istringstream ss(text);
  std::string field;
  if (pk.size() > 64) throw std::invalid_argument("too many items for --keep");
  while (std::getline(ss, field, ',')) {
    field.erase(std::remove_if(field.begin(), field.end(), ::isspace), field.end());
    if (field.empty()) continue;
    std::size_t used = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad position '" + field + "'");
    }
    if (used != field.size() || index < 1 || index > pk.size()) {
      throw std::invalid_argument("bad position '" + field + "'");
    }
    mask |= std::uint64_t{1} << (index - 1);
  }
  return SubTheory::from_positions(pk, mask);
}

std::string format_subtheory(const PenaltyKB& pk, const SubTheory& a) {
  std::vector<std::size_t> positions;
  for (auto tag : a.tags()) positions.push_back(pk.position_of(tag) + 1);
  std::sort(positions.begin(), positions.end());
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + "}";
}

int answer(bool value, std::ostream& out) {
  out << (value ? "true" : "false") << '\n';
  return value ? kSuccess : kFalseAnswer;
}

struct Options {
  std::string kb, kb2, graph;
  std::string formula, world, keep, premise, conclusion, order = "freq", scale = "1";
  bool one = false, oracle = false, subtheories = false, semantic = false;
  double tol = kMassTolerance;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Penalty logic engine"};
  app.name("penalty");
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Minimum-cost interpretations");
  solve->add_option("kb", o.kb, "knowledge base file")->required();
  solve->add_flag("--one", o.one, "only the lexicographically smallest witness");
  solve->add_flag("--oracle", o.oracle, "exhaustive enumeration");
  solve->add_option("--order", o.order, "branching order")
      ->check(CLI::IsMember({"lex", "freq"}));

  auto* cost = app.add_subcommand("cost", "Cost of a formula, interpretation or sub-theory");
  cost->add_option("kb", o.kb, "knowledge base file")->required();
  auto* cf = cost->add_option("--formula", o.formula, "consistency cost of a formula");
  auto* cw = cost->add_option("--world", o.world, "cost of an interpretation, e.g. \"a b !c\"");
  auto* ck = cost->add_option("--keep", o.keep, "cost of the sub-theory at one-based positions");
  cf->excludes(cw)->excludes(ck);
  cw->excludes(ck);
  cost->add_flag("--oracle", o.oracle, "exhaustive enumeration");

  auto* entail = app.add_subcommand("entail", "Preferential consequence");
  entail->add_option("kb", o.kb, "knowledge base file")->required();
  entail->add_option("--premise", o.premise)->required();
  entail->add_option("--conclusion", o.conclusion)->required();
  auto* eo = entail->add_flag("--oracle", o.oracle, "exhaustive enumeration");
  auto* es = entail->add_flag("--subtheories", o.subtheories, "decide through sub-theories");
  eo->excludes(es);

  auto* subs = app.add_subcommand("subtheories", "Preferred sub-theories");
  subs->add_option("kb", o.kb, "knowledge base file")->required();
  subs->add_option("--formula", o.formula, "restrict to sub-theories consistent with it");

  auto* equiv = app.add_subcommand("equiv", "Semantic equivalence of two bases");
  equiv->add_option("kb", o.kb)->required();
  equiv->add_option("other", o.kb2)->required();

  auto* cheaper = app.add_subcommand("cheaper", "First base never costs more than the second");
  cheaper->add_option("kb", o.kb)->required();
  cheaper->add_option("other", o.kb2)->required();

  auto* norm = app.add_subcommand("normalize", "Merge repeated formulas");
  norm->add_option("kb", o.kb)->required();
  norm->add_flag("--semantic", o.semantic, "merge logically equivalent formulas");

  auto* enc = app.add_subcommand("encode-clique", "Max-clique encoding of a DIMACS graph");
  enc->add_option("graph", o.graph)->required();

  auto* clique = app.add_subcommand("clique", "Maximum clique of a DIMACS graph");
  clique->add_option("graph", o.graph)->required();

  auto* ds_check = app.add_subcommand("ds-check", "Contour identity deviation");
  ds_check->add_option("kb", o.kb)->required();
  ds_check->add_option("--tol", o.tol, "largest accepted deviation")->check(CLI::NonNegativeNumber);

  auto* ds_order = app.add_subcommand("ds-order", "Infinitesimal plausibility order");
  ds_order->add_option("kb", o.kb)->required();
  ds_order->add_option("--formula", o.formula)->required();

  auto* wcnf = app.add_subcommand("export-wcnf", "Weighted CNF export");
  wcnf->add_option("kb", o.kb)->required();
  wcnf->add_option("--scale", o.scale, "multiplier making finite penalties integral");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    auto load_kb = [&](const std::string& path) { return parse_kb(read_source(path, in)); };

    if (solve->parsed()) {
      const PenaltyKB pk = load_kb(o.kb);
      SearchConfig cfg;
      cfg.witness_mode = o.one ? WitnessMode::kOne : WitnessMode::kAll;
      cfg.variable_order = o.order == "lex" ? VariableOrder::kLexicographic : VariableOrder::kFrequency;
      const SolveResult r = o.oracle ? brute_force_min_cost(pk, cfg) : min_cost_interpretations(pk, cfg);
      out << "optimum " << r.optimum << '\n';
      for (const auto& w : r.witnesses) out << w.to_string() << '\n';
      return kSuccess;
    }
    if (cost->parsed()) {
      const PenaltyKB pk = load_kb(o.kb);
      if (*cf) {
        const Formula f = parse_formula(o.formula);
        if (o.oracle) {
          const Vocabulary v = pk.vocabulary().merged_with(Vocabulary::of(f));
          SearchConfig cfg;
          cfg.witness_mode = WitnessMode::kOne;
          const PenaltyKB hard = add_hard(pk, f);
          out << brute_force_min_cost(hard, v, cfg).optimum << '\n';
        } else {
          out << consistency_cost(pk, f) << '\n';
        }
      } else if (*cw) {
        out << interpretation_cost(pk, parse_world(o.world, pk.vocabulary())) << '\n';
      } else if (*ck) {
        out << subtheory_cost(pk, parse_positions(o.keep, pk)) << '\n';
      } else {
        err << "cost: one of --formula, --world or --keep is required\n";
        return kUsageError;
      }
      return kSuccess;
    }
    if (entail->parsed()) {
      const PenaltyKB pk = load_kb(o.kb);
      const Query q{parse_formula(o.premise), parse_formula(o.conclusion)};
      if (o.oracle) return answer(nm_entails_brute_force(pk, q), out);
      if (o.subtheories) return answer(nm_entails_by_subtheories(pk, q), out);
      return answer(nm_entails(pk, q), out);
    }
    if (subs->parsed()) {
      const PenaltyKB pk = load_kb(o.kb);
      const Formula f = o.formula.empty() ? Formula::top() : parse_formula(o.formula);
      const auto preferred = phi_preferred_subtheories(pk, f);
      out << "cost " << (preferred.empty() ? Cost::infinite() : subtheory_cost(pk, preferred.front()))
          << '\n';
      for (const auto& a : preferred) out << format_subtheory(pk, a) << '\n';
      return kSuccess;
    }
    if (equiv->parsed()) {
      return answer(semantically_equivalent(load_kb(o.kb), load_kb(o.kb2)), out);
    }
    if (cheaper->parsed()) {
      return answer(less_expensive(load_kb(o.kb), load_kb(o.kb2)), out);
    }
    if (norm->parsed()) {
      out << format_kb(normalize(load_kb(o.kb), o.semantic ? MergeMode::kSemantic : MergeMode::kSyntactic));
      return kSuccess;
    }
    if (enc->parsed()) {
      out << format_kb(encode_max_clique(read_dimacs_graph(read_source(o.graph, in))));
      return kSuccess;
    }
    if (clique->parsed()) {
      const CliqueResult r = solve_max_clique(read_dimacs_graph(read_source(o.graph, in)));
      out << "size " << r.size << '\n' << "optimum " << r.optimum << '\n' << "clique";
      for (const auto& v : r.vertices) out << ' ' << v;
      out << '\n';
      return kSuccess;
    }
    if (ds_check->parsed()) {
      const double deviation = check_contour_identity(load_kb(o.kb));
      out << std::setprecision(12) << deviation << '\n';
      return deviation <= o.tol ? kSuccess : kFalseAnswer;
    }
    if (ds_order->parsed()) {
      const auto r = infinitesimal_plausibility(load_kb(o.kb), parse_formula(o.formula));
      out << "exponent " << r.exponent << " multiplicity " << r.multiplicity << '\n';
      return kSuccess;
    }
    if (wcnf->parsed()) {
      out << export_wcnf(load_kb(o.kb), parse_rational(o.scale));
      return kSuccess;
    }
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace penalty::cli
