// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "belnap/entailment.hpp"
#include "belnap/invariants.hpp"
#include "belnap/proof_io.hpp"
#include "belnap/sequent.hpp"
#include "fixed_cases.hpp"

using namespace belnap;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void absorb(const SuiteReport& r) {
    require(r.ok(), r.name + ": " + r.first_violation);
    if (ok) detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.cases);
  }
};

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;  // 0 = no time limit
  std::function<Outcome()> body;
};

std::string show(const Judgment& j) { return "<" + format_judgment(j) + ">"; }

Outcome fixed_examples() {
  Outcome o;
  int valid = 0;
  for (const auto& c : kFixedCases) {
    Judgment j = parse_judgment(c.judgment);
    Verdict v = b_entails(j);
    bool derivable = std::holds_alternative<ProofTree>(prove(j));
    o.require(v.valid() == c.valid, std::string(c.group) + " case " + show(j) + " has the wrong verdict");
    o.require(derivable == c.valid, "prover disagrees on " + show(j));
    valid += v.valid();
  }
  o.require(valid == 2, "expected exactly two valid conjunction forms");
  if (o.ok) o.detail = std::to_string(kFixedCases.size()) + " cases, " + std::to_string(valid) + " valid";
  return o;
}

Outcome countermodel_fidelity() {
  Outcome o;
  auto countermodel = [&](const char* text) -> std::optional<Countermodel> {
    ProveResult r = prove(parse_judgment(text));
    if (const auto* cm = std::get_if<Countermodel>(&r)) return *cm;
    o.require(false, std::string("no countermodel for ") + text);
    return std::nullopt;
  };
  if (auto cm = countermodel("a : |- a :")) o.require(cm->agent.value("a") == kBoth, "<a : |- a :> needs a=b");
  if (auto cm = countermodel(": a |- : a")) o.require(cm->agent.value("a") == kNeither, "<: a |- : a> needs a=n");

  int replayed = 0;
  for (const auto& c : kFixedCases) {
    if (c.group != "conjunction" || c.valid) continue;
    Judgment j = parse_judgment(c.judgment);
    auto cm = countermodel(std::string(c.judgment).c_str());
    if (!cm) continue;
    for (Position p : kAllPositions)
      for (const auto& f : j.at(p))
        o.require(holds(cm->agent, f, attitude_of(p)),
                  format_agent(cm->agent) + " does not " + std::string(attitude_name(attitude_of(p))) + " '" +
                      render(f) + "' in " + show(j));
    ++replayed;
  }
  if (o.ok) o.detail = "a=b, a=n, " + std::to_string(replayed) + " attitude patterns replayed";
  return o;
}

Outcome prover_equivalence() {
  Outcome o;
  o.absorb(check_prover_exhaustive(2, 2));
  SelftestScale s;
  s.random_cases = 10000;
  s.random_depth = 4;
  s.random_atoms = 3;
  o.absorb(check_prover_random(s));
  return o;
}

Outcome collapse() {
  Outcome o;
  o.absorb(check_collapse(2, 2));
  return o;
}

Outcome b_properties() {
  Outcome o;
  SelftestScale s;
  s.random_cases = 1000;
  s.random_depth = 3;
  s.random_atoms = 3;
  for (const auto& r : check_b_properties(s)) o.absorb(r);
  return o;
}

Outcome bilattice_laws() {
  Outcome o;
  o.absorb(check_lattice_laws());
  o.absorb(check_bilattice_axioms());
  o.absorb(check_bifilters());
  o.absorb(check_infimum_equivalence(2, 2));
  return o;
}

Outcome clause_fidelity() {
  Outcome o;
  o.absorb(check_clauses(3, 2));
  return o;
}

Outcome derivation_replay() {
  Outcome o;
  for (const char* name : {"de_morgan_derivation.json", "distribution_derivation.json"}) {
    std::ifstream in(std::string(BELNAP_DATA_DIR) + "/" + name);
    if (!in) {
      o.require(false, std::string("cannot open ") + name);
      continue;
    }
    ProofTree t = proof_from_json(nlohmann::json::parse(in));
    CheckResult c = check_proof(t);
    o.require(c.ok, std::string(name) + " rejected: " + c.explanation);
    ProveResult r = prove(t.conclusion);
    const auto* found = std::get_if<ProofTree>(&r);
    o.require(found != nullptr, "prover fails on " + show(t.conclusion));
    if (found) o.require(check_proof(*found).ok, "prover output for " + show(t.conclusion) + " rejected");
  }
  if (o.ok) o.detail = "2 derivations checked and re-derived";
  return o;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "fixed conjunction, explosion and excluded-middle verdicts", 1.0, fixed_examples},
      {2, "countermodel fidelity", 1.0, countermodel_fidelity},
      {3, "prover agrees with enumeration", 60.0, prover_equivalence},
      {4, "collapse of t/f and q/p", 0.0, collapse},
      {5, "B-reflexivity, monotonicity, transitivity", 0.0, b_properties},
      {6, "bilattice and bifilter laws", 1.0, bilattice_laws},
      {7, "clauses, value tables and star agent", 0.0, clause_fidelity},
      {8, "derivation replay", 1.0, derivation_replay},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.budget_seconds > 0 && seconds >= c.budget_seconds) {
      o.ok = false;
      o.detail = "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    }
    failures += !o.ok;
    std::ostringstream line;
    line.precision(3);
    line << (o.ok ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title << " (" << o.detail
         << "; " << std::fixed << seconds << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
