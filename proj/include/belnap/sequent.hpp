#ifndef BELNAP_SEQUENT_HPP
#define BELNAP_SEQUENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "belnap/entailment.hpp"
#include "belnap/judgment.hpp"

namespace belnap {

// Rules of the four-slot sequent calculus. Logical rules are named by
// connective and by the attitude of the slot holding the principal formula:
// y = gamma, not_acc = delta, rej = phi, not_rej = psi.
enum class Rule {
  in_t,
  in_f,
  weak,
  cut_t,
  cut_f,
  conj_y,
  conj_not_acc,
  conj_rej,
  conj_not_rej,
  disj_y,
  disj_not_acc,
  disj_rej,
  disj_not_rej,
  neg_y,
  neg_not_acc,
  neg_rej,
  neg_not_rej,
};

// Serialized names: InT, InF, Weak, CutT, CutF, ConjY, ConjNotAcc, ...
std::string_view rule_name(Rule r) noexcept;
std::optional<Rule> rule_from_name(std::string_view name) noexcept;

bool is_logical(Rule r) noexcept;
// Number of premises the rule takes.
std::size_t rule_arity(Rule r) noexcept;
// The logical rule for a compound principal formula in slot `p`.
Rule logical_rule(Connective c, Position p);

struct Occurrence {
  Position position;
  Formula formula;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct ProofTree {
  BSequent conclusion;
  Rule rule;
  // Principal formula of logical rules. For axioms it names the matched
  // formula and for cuts the cut formula; both are optional there.
  std::optional<Occurrence> principal;
  std::vector<ProofTree> premises;
};

// Base case of proof search over an all-atomic sequent: some atom lies in
// both gamma and delta (in_t) or in both phi and psi (in_f).
// Throws RuleError (non_atomic_sequent) on compound formulas.
bool atomic_valid(const BSequent& s);

// Premises of the logical rule whose principal is `occurrence`: the principal
// is removed from its slot and replaced per the rule table.
// Throws RuleError if the formula is absent from the slot or is an atom.
std::vector<BSequent> expand(const BSequent& s, const Occurrence& occurrence);

struct CheckResult {
  bool ok = true;
  // Premise indices from the root to the first offending node (preorder).
  std::vector<std::size_t> path;
  std::string explanation;

  explicit operator bool() const noexcept { return ok; }
};

// Validates every node. Axioms and logical nodes absorb weakening: an axiom
// may sit in a larger context, and a premise of a logical rule or cut may
// be any componentwise subset of the premise the rule would produce.
CheckResult check_proof(const ProofTree& t);

using ProveResult = std::variant<ProofTree, Countermodel>;

// Cut-free backward search. Rules are applied to the first compound formula
// (slots gamma, psi, phi, delta; canonical formula order inside a slot)
// until every leaf is atomic. A failing leaf yields a countermodel that
// refutes the root. Throws DomainTooLargeError on the refutation branch
// when the root has more than `max_atoms` atoms.
ProveResult prove(const BSequent& s, std::size_t max_atoms = kDefaultMaxAtoms);

bool uses_rule(const ProofTree& t, Rule r);
std::size_t proof_size(const ProofTree& t);

}  // namespace belnap

#endif  // BELNAP_SEQUENT_HPP
