#ifndef BELNAP_ENTAILMENT_HPP
#define BELNAP_ENTAILMENT_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "belnap/agent.hpp"
#include "belnap/judgment.hpp"

namespace belnap {

// One line of a countermodel report: the formula, the slot it sits in, the
// attitude that slot demands (and the agent holds), and its value.
struct ReportEntry {
  Formula formula;
  Position position;
  Attitude attitude;
  FourValue value;
};

struct Countermodel {
  Agent agent;
  std::vector<ReportEntry> report;
};

// Builds the attitude report of `agent` over every formula of `j`.
Countermodel make_countermodel(Agent agent, const Judgment& j);

struct Verdict {
  std::optional<Countermodel> countermodel;

  bool valid() const noexcept { return !countermodel.has_value(); }
};

// B-entailment by exhaustive enumeration of agents over the atoms of `j`.
// Invalid verdicts carry the first refuting agent in AgentSpace order.
Verdict b_entails(const Judgment& j, std::size_t max_atoms = kDefaultMaxAtoms);

enum class Relation { t, f, q, p, b };

std::optional<Relation> relation_from_name(std::string_view name) noexcept;
std::string_view relation_name(Relation r) noexcept;

// Slot that holds the premises and the conclusion for a single-conclusion
// relation: t = <G : |- : d>, f = <: G |- d :>, q = <: G |- : d>,
// p = <G : |- d :>. Relation::b has no fixed shape.
Position premise_position(Relation r);
Position conclusion_position(Relation r);

Judgment relation_judgment(Relation r, const FormulaSet& premises, const Formula& conclusion);

Verdict entails_t(const FormulaSet& premises, const Formula& conclusion,
                  std::size_t max_atoms = kDefaultMaxAtoms);
Verdict entails_f(const FormulaSet& premises, const Formula& conclusion,
                  std::size_t max_atoms = kDefaultMaxAtoms);
Verdict entails_q(const FormulaSet& premises, const Formula& conclusion,
                  std::size_t max_atoms = kDefaultMaxAtoms);
Verdict entails_p(const FormulaSet& premises, const Formula& conclusion,
                  std::size_t max_atoms = kDefaultMaxAtoms);

// The order-theoretic formulation of FDE consequence: for every valuation the
// truth-order infimum of the premise values lies below the conclusion's
// value. The infimum of no premises is t.
bool entails_by_infimum(const FormulaSet& premises, const Formula& conclusion,
                        std::size_t max_atoms = kDefaultMaxAtoms);

}  // namespace belnap

#endif  // BELNAP_ENTAILMENT_HPP
