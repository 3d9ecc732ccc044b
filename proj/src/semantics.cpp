#include <string>

#include "penalty/error.hpp"
#include "penalty/logic.hpp"

namespace penalty {

CompiledFormula::CompiledFormula(const Formula& f, const Vocabulary& vocabulary) {
  if (vocabulary.size() > kMaxInterpretationAtoms) {
    throw CapExceeded("vocabulary too large to compile against");
  }
  root_ = compile(f, vocabulary);
}

std::uint32_t CompiledFormula::compile(const Formula& f, const Vocabulary& vocabulary) {
  Op op{f.kind()};
  switch (f.kind()) {
    case Formula::Kind::kTop:
    case Formula::Kind::kBottom:
      break;
    case Formula::Kind::kAtom: {
      auto i = vocabulary.index_of(f.name());
      if (!i) throw VocabularyError("atom '" + f.name() + "' is not in the vocabulary");
      op.bit = atom_bit(*i, vocabulary.size());
      break;
    }
    case Formula::Kind::kNot:
      op.lhs = compile(f.operand(), vocabulary);
      break;
    default:
      op.lhs = compile(f.lhs(), vocabulary);
      op.rhs = compile(f.rhs(), vocabulary);
  }
  ops_.push_back(op);
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

bool CompiledFormula::evaluate(std::uint64_t code) const { return eval(root_, code); }

Truth CompiledFormula::evaluate(std::uint64_t assigned, std::uint64_t values) const {
  return eval3(root_, assigned, values);
}

bool CompiledFormula::eval(std::uint32_t at, std::uint64_t code) const {
  const Op& op = ops_[at];
  switch (op.kind) {
    case Formula::Kind::kTop: return true;
    case Formula::Kind::kBottom: return false;
    case Formula::Kind::kAtom: return (code & op.bit) != 0;
    case Formula::Kind::kNot: return !eval(op.lhs, code);
    case Formula::Kind::kAnd: return eval(op.lhs, code) && eval(op.rhs, code);
    case Formula::Kind::kOr: return eval(op.lhs, code) || eval(op.rhs, code);
    case Formula::Kind::kImplies: return !eval(op.lhs, code) || eval(op.rhs, code);
    case Formula::Kind::kIff: return eval(op.lhs, code) == eval(op.rhs, code);
  }
  return false;
}

namespace {

Truth kleene_not(Truth a) {
  if (a == Truth::kUnknown) return a;
  return a == Truth::kTrue ? Truth::kFalse : Truth::kTrue;
}

Truth kleene_and(Truth a, Truth b) {
  if (a == Truth::kFalse || b == Truth::kFalse) return Truth::kFalse;
  if (a == Truth::kTrue && b == Truth::kTrue) return Truth::kTrue;
  return Truth::kUnknown;
}

Truth kleene_or(Truth a, Truth b) {
  if (a == Truth::kTrue || b == Truth::kTrue) return Truth::kTrue;
  if (a == Truth::kFalse && b == Truth::kFalse) return Truth::kFalse;
  return Truth::kUnknown;
}

}  // namespace

Truth CompiledFormula::eval3(std::uint32_t at, std::uint64_t assigned, std::uint64_t values) const {
  const Op& op = ops_[at];
  switch (op.kind) {
    case Formula::Kind::kTop: return Truth::kTrue;
    case Formula::Kind::kBottom: return Truth::kFalse;
    case Formula::Kind::kAtom:
      if (!(assigned & op.bit)) return Truth::kUnknown;
      return (values & op.bit) ? Truth::kTrue : Truth::kFalse;
    case Formula::Kind::kNot: return kleene_not(eval3(op.lhs, assigned, values));
    case Formula::Kind::kAnd: {
      Truth l = eval3(op.lhs, assigned, values);
      if (l == Truth::kFalse) return l;
      return kleene_and(l, eval3(op.rhs, assigned, values));
    }
    case Formula::Kind::kOr: {
      Truth l = eval3(op.lhs, assigned, values);
      if (l == Truth::kTrue) return l;
      return kleene_or(l, eval3(op.rhs, assigned, values));
    }
    case Formula::Kind::kImplies: {
      Truth l = kleene_not(eval3(op.lhs, assigned, values));
      if (l == Truth::kTrue) return l;
      return kleene_or(l, eval3(op.rhs, assigned, values));
    }
    case Formula::Kind::kIff: {
      Truth l = eval3(op.lhs, assigned, values);
      Truth r = eval3(op.rhs, assigned, values);
      if (l == Truth::kUnknown || r == Truth::kUnknown) return Truth::kUnknown;
      return l == r ? Truth::kTrue : Truth::kFalse;
    }
  }
  return Truth::kUnknown;
}

bool evaluate(const Formula& f, const Interpretation& w) {
  return CompiledFormula(f, w.vocabulary()).evaluate(w.code());
}

Truth partial_evaluate(const Formula& f, const PartialAssignment& p) {
  return CompiledFormula(f, p.vocabulary()).evaluate(p.assigned_mask(), p.value_mask());
}

void check_enumeration_cap(const Vocabulary& v, std::size_t cap) {
  if (v.size() > cap) {
    throw CapExceeded("vocabulary of " + std::to_string(v.size()) +
                      " atoms exceeds the enumeration cap of " + std::to_string(cap));
  }
}

InterpretationRange enumerate_interpretations(const Vocabulary& v, std::size_t cap) {
  check_enumeration_cap(v, cap);
  return InterpretationRange(v);
}

namespace {

// True if some interpretation over v satisfies every formula.
bool any_model(std::span<const CompiledFormula> fs, const Vocabulary& v) {
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    bool all = true;
    for (const auto& f : fs) {
      if (!f.evaluate(code)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool entails(const Formula& f, const Formula& g, std::size_t cap) {
  const Formula both[] = {f, g};
  const Vocabulary v = Vocabulary::of(both);
  check_enumeration_cap(v, cap);
  const CompiledFormula cf(f, v), cg(g, v);
  const std::uint64_t n = std::uint64_t{1} << v.size();
  for (std::uint64_t code = 0; code < n; ++code) {
    if (cf.evaluate(code) && !cg.evaluate(code)) return false;
  }
  return true;
}

bool equivalent(const Formula& f, const Formula& g, std::size_t cap) {
  return entails(f, g, cap) && entails(g, f, cap);
}

bool is_consistent(std::span<const Formula> fs, std::size_t cap) {
  const Vocabulary v = Vocabulary::of(fs);
  check_enumeration_cap(v, cap);
  std::vector<CompiledFormula> compiled;
  compiled.reserve(fs.size());
  for (const auto& f : fs) compiled.emplace_back(f, v);
  return any_model(compiled, v);
}

bool is_satisfiable(const Formula& f, std::size_t cap) {
  return is_consistent(std::span<const Formula>(&f, 1), cap);
}

std::vector<bool> truth_table(const Formula& f, const Vocabulary& v, std::size_t cap) {
  check_enumeration_cap(v, cap);
  const CompiledFormula cf(f, v);
  const std::uint64_t n = std::uint64_t{1} << v.size();
  std::vector<bool> out(n);
  for (std::uint64_t code = 0; code < n; ++code) out[code] = cf.evaluate(code);
  return out;
}

}  // namespace penalty
