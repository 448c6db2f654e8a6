#include "belnap/entailment.hpp"

#include <algorithm>
#include <utility>

#include "compiled.hpp"

namespace belnap {

namespace detail {

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& atoms) {
  emit(f, atoms);
}

void CompiledFormula::emit(const Formula& f, const std::vector<std::string>& atoms) {
  switch (f.connective()) {
    case Connective::atom: {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
      if (it == atoms.end() || *it != f.name()) throw UnknownAtomError(f.name());
      ops_.push_back({Connective::atom, static_cast<std::size_t>(it - atoms.begin())});
      return;
    }
    case Connective::negation:
      emit(f.operand(), atoms);
      break;
    default:
      emit(f.left(), atoms);
      emit(f.right(), atoms);
  }
  ops_.push_back({f.connective(), 0});
}

FourValue CompiledFormula::evaluate(std::span<const FourValue> values,
                                    std::vector<FourValue>& stack) const {
  stack.clear();
  for (const Op& op : ops_) {
    switch (op.connective) {
      case Connective::atom:
        stack.push_back(values[op.atom]);
        break;
      case Connective::negation:
        stack.back() = neg_t(stack.back());
        break;
      case Connective::conjunction: {
        FourValue r = stack.back();
        stack.pop_back();
        stack.back() = meet_t(stack.back(), r);
        break;
      }
      case Connective::disjunction: {
        FourValue r = stack.back();
        stack.pop_back();
        stack.back() = join_t(stack.back(), r);
        break;
      }
    }
  }
  return stack.back();
}

}  // namespace detail

Countermodel make_countermodel(Agent agent, const Judgment& j) {
  Countermodel cm{std::move(agent), {}};
  for (Position p : kAllPositions) {
    for (const auto& f : j.at(p)) {
      cm.report.push_back({f, p, attitude_of(p), evaluate(cm.agent, f)});
    }
  }
  return cm;
}

Verdict b_entails(const Judgment& j, std::size_t max_atoms) {
  AgentSpace space(j.atoms(), max_atoms);

  struct Check {
    detail::CompiledFormula formula;
    Attitude attitude;
  };
  std::vector<Check> checks;
  for (Position p : kAllPositions)
    for (const auto& f : j.at(p)) checks.push_back({detail::CompiledFormula(f, space.atoms()), attitude_of(p)});

  std::vector<FourValue> values;
  std::vector<FourValue> stack;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    space.values_at(i, values);
    bool refuting = true;
    for (const Check& c : checks) {
      if (!holds(c.formula.evaluate(values, stack), c.attitude)) {
        refuting = false;
        break;
      }
    }
    if (refuting) return Verdict{make_countermodel(space[i], j)};
  }
  return Verdict{};
}

std::optional<Relation> relation_from_name(std::string_view name) noexcept {
  if (name == "t") return Relation::t;
  if (name == "f") return Relation::f;
  if (name == "q") return Relation::q;
  if (name == "p") return Relation::p;
  if (name == "b") return Relation::b;
  return std::nullopt;
}

std::string_view relation_name(Relation r) noexcept {
  switch (r) {
    case Relation::t: return "t";
    case Relation::f: return "f";
    case Relation::q: return "q";
    case Relation::p: return "p";
    case Relation::b: return "b";
  }
  return "?";
}

Position premise_position(Relation r) {
  switch (r) {
    case Relation::t:
    case Relation::p: return Position::gamma;
    case Relation::f:
    case Relation::q: return Position::psi;
    case Relation::b: break;
  }
  throw Error("B-entailment has no single premise slot");
}

Position conclusion_position(Relation r) {
  switch (r) {
    case Relation::t:
    case Relation::q: return Position::delta;
    case Relation::f:
    case Relation::p: return Position::phi;
    case Relation::b: break;
  }
  throw Error("B-entailment has no single conclusion slot");
}

Judgment relation_judgment(Relation r, const FormulaSet& premises, const Formula& conclusion) {
  Judgment j;
  j.at(premise_position(r)) = premises;
  j.at(conclusion_position(r)).insert(conclusion);
  return j;
}

Verdict entails_t(const FormulaSet& premises, const Formula& conclusion, std::size_t max_atoms) {
  return b_entails(relation_judgment(Relation::t, premises, conclusion), max_atoms);
}

Verdict entails_f(const FormulaSet& premises, const Formula& conclusion, std::size_t max_atoms) {
  return b_entails(relation_judgment(Relation::f, premises, conclusion), max_atoms);
}

Verdict entails_q(const FormulaSet& premises, const Formula& conclusion, std::size_t max_atoms) {
  return b_entails(relation_judgment(Relation::q, premises, conclusion), max_atoms);
}

Verdict entails_p(const FormulaSet& premises, const Formula& conclusion, std::size_t max_atoms) {
  return b_entails(relation_judgment(Relation::p, premises, conclusion), max_atoms);
}

bool entails_by_infimum(const FormulaSet& premises, const Formula& conclusion,
                        std::size_t max_atoms) {
  std::set<std::string> domain = atoms(premises);
  domain.merge(atoms(conclusion));
  for (const Agent& s : all_agents(domain, max_atoms)) {
    FourValue inf = kTrue;
    for (const auto& g : premises) inf = meet_t(inf, evaluate(s, g));
    if (!leq_t(inf, evaluate(s, conclusion))) return false;
  }
  return true;
}

}  // namespace belnap
