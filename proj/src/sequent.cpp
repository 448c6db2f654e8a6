#include "belnap/sequent.hpp"

#include <algorithm>
#include <array>
#include <iterator>

namespace belnap {

namespace {

struct RuleInfo {
  Rule rule;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<RuleInfo, 17> kRules{{
    {Rule::in_t, "InT", 0},
    {Rule::in_f, "InF", 0},
    {Rule::weak, "Weak", 1},
    {Rule::cut_t, "CutT", 2},
    {Rule::cut_f, "CutF", 2},
    {Rule::conj_y, "ConjY", 1},
    {Rule::conj_not_acc, "ConjNotAcc", 2},
    {Rule::conj_rej, "ConjRej", 2},
    {Rule::conj_not_rej, "ConjNotRej", 1},
    {Rule::disj_y, "DisjY", 2},
    {Rule::disj_not_acc, "DisjNotAcc", 1},
    {Rule::disj_rej, "DisjRej", 1},
    {Rule::disj_not_rej, "DisjNotRej", 2},
    {Rule::neg_y, "NegY", 1},
    {Rule::neg_not_acc, "NegNotAcc", 1},
    {Rule::neg_rej, "NegRej", 1},
    {Rule::neg_not_rej, "NegNotRej", 1},
}};

const RuleInfo& info(Rule r) { return kRules[static_cast<std::size_t>(r)]; }

FormulaSet intersection(const FormulaSet& a, const FormulaSet& b) {
  FormulaSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

}  // namespace

std::string_view rule_name(Rule r) noexcept { return info(r).name; }

std::optional<Rule> rule_from_name(std::string_view name) noexcept {
  for (const auto& ri : kRules)
    if (ri.name == name) return ri.rule;
  return std::nullopt;
}

bool is_logical(Rule r) noexcept { return static_cast<int>(r) >= static_cast<int>(Rule::conj_y); }

std::size_t rule_arity(Rule r) noexcept { return info(r).arity; }

Rule logical_rule(Connective c, Position p) {
  static constexpr Rule conj[] = {Rule::conj_y, Rule::conj_not_rej, Rule::conj_rej, Rule::conj_not_acc};
  static constexpr Rule disj[] = {Rule::disj_y, Rule::disj_not_rej, Rule::disj_rej, Rule::disj_not_acc};
  static constexpr Rule neg[] = {Rule::neg_y, Rule::neg_not_rej, Rule::neg_rej, Rule::neg_not_acc};
  auto i = static_cast<std::size_t>(p);
  switch (c) {
    case Connective::conjunction: return conj[i];
    case Connective::disjunction: return disj[i];
    case Connective::negation: return neg[i];
    case Connective::atom: break;
  }
  throw RuleError(RuleError::Kind::atomic_principal, "atoms have no logical rule");
}

bool atomic_valid(const BSequent& s) {
  if (!s.is_atomic()) {
    throw RuleError(RuleError::Kind::non_atomic_sequent,
                    "atomic_valid needs an all-atomic sequent: " + format_judgment(s));
  }
  return !intersection(s.gamma, s.delta).empty() || !intersection(s.phi, s.psi).empty();
}

std::vector<BSequent> expand(const BSequent& s, const Occurrence& occ) {
  const Formula& f = occ.formula;
  if (!s.at(occ.position).contains(f)) {
    throw RuleError(RuleError::Kind::formula_not_found,
                    "'" + render(f) + "' does not occur in " + std::string(position_name(occ.position)));
  }
  if (f.is_atom()) {
    throw RuleError(RuleError::Kind::atomic_principal,
                    "principal formula '" + render(f) + "' is an atom");
  }

  BSequent rest = s;
  rest.at(occ.position).erase(f);

  auto with = [&rest](Position p, std::initializer_list<Formula> added) {
    BSequent out = rest;
    for (const auto& g : added) out.at(p).insert(g);
    return out;
  };

  if (f.connective() == Connective::negation) {
    // Y ~A iff N A; N ~A iff Y A; not-Y ~A iff not-N A; not-N ~A iff not-Y A.
    Position target = Position::gamma;
    switch (occ.position) {
      case Position::gamma: target = Position::phi; break;
      case Position::phi: target = Position::gamma; break;
      case Position::delta: target = Position::psi; break;
      case Position::psi: target = Position::delta; break;
    }
    return {with(target, {f.operand()})};
  }

  const Formula& a = f.left();
  const Formula& b = f.right();
  bool conj = f.connective() == Connective::conjunction;
  // Slots where the connective splits into two premises: for & the
  // disjunctive attitudes (not-accept, reject), for | the others.
  bool branching = conj ? (occ.position == Position::delta || occ.position == Position::phi)
                        : (occ.position == Position::gamma || occ.position == Position::psi);
  if (branching) return {with(occ.position, {a}), with(occ.position, {b})};
  return {with(occ.position, {a, b})};
}

namespace {

std::string describe(const BSequent& s) { return "<" + format_judgment(s) + ">"; }

std::optional<std::string> check_node(const ProofTree& t) {
  const BSequent& c = t.conclusion;
  if (t.premises.size() != rule_arity(t.rule)) {
    return std::string(rule_name(t.rule)) + " takes " + std::to_string(rule_arity(t.rule)) +
           " premise(s), node has " + std::to_string(t.premises.size());
  }

  switch (t.rule) {
    case Rule::in_t:
    case Rule::in_f: {
      bool truth = t.rule == Rule::in_t;
      const FormulaSet& first = truth ? c.gamma : c.psi;
      const FormulaSet& second = truth ? c.delta : c.phi;
      std::string slots = truth ? "gamma and delta" : "psi and phi";
      if (t.principal) {
        if (!first.contains(t.principal->formula) || !second.contains(t.principal->formula))
          return std::string(rule_name(t.rule)) + " formula '" + render(t.principal->formula) +
                 "' must occur in both " + slots;
        return std::nullopt;
      }
      if (intersection(first, second).empty())
        return std::string(rule_name(t.rule)) + " needs a formula shared by " + slots + " in " +
               describe(c);
      return std::nullopt;
    }

    case Rule::weak:
      if (!t.premises[0].conclusion.subset_of(c))
        return "Weak premise " + describe(t.premises[0].conclusion) +
               " is not contained in the conclusion " + describe(c);
      return std::nullopt;

    case Rule::cut_t:
    case Rule::cut_f: {
      bool truth = t.rule == Rule::cut_t;
      Position first = truth ? Position::gamma : Position::psi;
      Position second = truth ? Position::delta : Position::phi;
      FormulaSet candidates;
      if (t.principal) {
        candidates.insert(t.principal->formula);
      } else {
        candidates = t.premises[0].conclusion.at(first);
        candidates.insert(t.premises[1].conclusion.at(second).begin(),
                          t.premises[1].conclusion.at(second).end());
      }
      for (const auto& cut : candidates) {
        BSequent left = c;
        left.at(first).insert(cut);
        BSequent right = c;
        right.at(second).insert(cut);
        if (t.premises[0].conclusion.subset_of(left) && t.premises[1].conclusion.subset_of(right))
          return std::nullopt;
      }
      return std::string(rule_name(t.rule)) + " premises do not match any cut formula for " +
             describe(c);
    }

    default:
      break;
  }

  if (!t.principal) return std::string(rule_name(t.rule)) + " needs a principal formula";
  const Occurrence& occ = *t.principal;
  if (occ.formula.is_atom()) return "principal formula '" + render(occ.formula) + "' is an atom";
  Rule expected = logical_rule(occ.formula.connective(), occ.position);
  if (expected != t.rule) {
    return "principal '" + render(occ.formula) + "' in " + std::string(position_name(occ.position)) +
           " calls for " + std::string(rule_name(expected)) + ", node says " +
           std::string(rule_name(t.rule));
  }
  if (!c.at(occ.position).contains(occ.formula)) {
    return "principal '" + render(occ.formula) + "' does not occur in " +
           std::string(position_name(occ.position)) + " of " + describe(c);
  }
  std::vector<BSequent> wanted = expand(c, occ);
  for (std::size_t i = 0; i < wanted.size(); ++i) {
    if (!t.premises[i].conclusion.subset_of(wanted[i]))
      return std::string(rule_name(t.rule)) + " premise " + std::to_string(i) + " " +
             describe(t.premises[i].conclusion) + " is not contained in " + describe(wanted[i]);
  }
  return std::nullopt;
}

bool check_rec(const ProofTree& t, std::vector<std::size_t>& path, CheckResult& out) {
  if (auto problem = check_node(t)) {
    out.ok = false;
    out.path = path;
    out.explanation = *problem;
    return false;
  }
  for (std::size_t i = 0; i < t.premises.size(); ++i) {
    path.push_back(i);
    if (!check_rec(t.premises[i], path, out)) return false;
    path.pop_back();
  }
  return true;
}

std::optional<Occurrence> first_compound(const BSequent& s) {
  for (Position p : kAllPositions)
    for (const auto& f : s.at(p))
      if (!f.is_atom()) return Occurrence{p, f};
  return std::nullopt;
}

// Returns nullopt and stores the failing leaf when some branch does not close.
std::optional<ProofTree> search(const BSequent& s, std::optional<BSequent>& failed) {
  auto occ = first_compound(s);
  if (!occ) {
    if (auto shared = intersection(s.gamma, s.delta); !shared.empty())
      return ProofTree{s, Rule::in_t, Occurrence{Position::gamma, *shared.begin()}, {}};
    if (auto shared = intersection(s.psi, s.phi); !shared.empty())
      return ProofTree{s, Rule::in_f, Occurrence{Position::psi, *shared.begin()}, {}};
    failed = s;
    return std::nullopt;
  }
  ProofTree node{s, logical_rule(occ->formula.connective(), occ->position), occ, {}};
  for (const BSequent& premise : expand(s, *occ)) {
    auto sub = search(premise, failed);
    if (!sub) return std::nullopt;
    node.premises.push_back(std::move(*sub));
  }
  return node;
}

}  // namespace

CheckResult check_proof(const ProofTree& t) {
  CheckResult out;
  std::vector<std::size_t> path;
  check_rec(t, path, out);
  return out;
}

ProveResult prove(const BSequent& s, std::size_t max_atoms) {
  std::optional<BSequent> failed;
  if (auto proof = search(s, failed)) return std::move(*proof);

  std::set<std::string> domain = s.atoms();
  if (domain.size() > max_atoms) throw DomainTooLargeError(max_atoms, domain.size());
  // The open leaf has gamma and delta disjoint and phi and psi disjoint, so
  // this agent refutes it; every rule passes refutation down to the root.
  Agent::Assignment assignment;
  for (const auto& atom : domain) {
    Formula p = Formula::atom(atom);
    assignment.emplace(atom, FourValue{failed->gamma.contains(p), failed->phi.contains(p)});
  }
  return make_countermodel(Agent(std::move(assignment)), s);
}

bool uses_rule(const ProofTree& t, Rule r) {
  if (t.rule == r) return true;
  return std::any_of(t.premises.begin(), t.premises.end(),
                     [r](const ProofTree& p) { return uses_rule(p, r); });
}

std::size_t proof_size(const ProofTree& t) {
  std::size_t n = 1;
  for (const auto& p : t.premises) n += proof_size(p);
  return n;
}

}  // namespace belnap
