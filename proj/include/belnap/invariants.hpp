#ifndef BELNAP_INVARIANTS_HPP
#define BELNAP_INVARIANTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "belnap/generate.hpp"
#include "belnap/sequent.hpp"

namespace belnap {

// Outcome of one invariant suite: how many instances were checked and the
// first counterexample, if any.
struct SuiteReport {
  explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;

  bool ok() const noexcept { return violations == 0; }
  void fail(const std::string& what);
};

struct SelftestScale {
  std::size_t exhaustive_depth = 2;  // formula depth for exhaustive suites
  std::size_t exhaustive_atoms = 2;  // atoms a, b, ... for exhaustive suites
  std::size_t random_cases = 1000;
  std::size_t random_depth = 4;
  std::size_t random_atoms = 3;
  std::uint64_t seed = 20180;
};

std::vector<std::string> atom_names(std::size_t n);  // a, b, c, ...

SuiteReport check_lattice_laws();
SuiteReport check_bilattice_axioms();
SuiteReport check_bifilters();
// Clauses for ~, &, | per attitude, value/attitude round trip and the star
// equivalences, for every formula up to `depth` and every agent.
SuiteReport check_clauses(std::size_t depth, std::size_t atoms);
SuiteReport check_infimum_equivalence(std::size_t depth, std::size_t atoms);
SuiteReport check_collapse(std::size_t depth, std::size_t atoms);
// prove agrees with b_entails on all sequents with at most one formula per slot.
SuiteReport check_prover_exhaustive(std::size_t depth, std::size_t atoms);
SuiteReport check_prover_random(const SelftestScale& scale);
// Reflexivities, monotonicity and both transitivities of B-entailment.
std::vector<SuiteReport> check_b_properties(const SelftestScale& scale);
SuiteReport check_star_duality(const SelftestScale& scale);
SuiteReport check_invertibility(const SelftestScale& scale);
SuiteReport check_derivation_soundness(const SelftestScale& scale);

// Random derivation built forward from axioms with weakening, cuts and
// logical rules; accepted by check_proof by construction.
ProofTree random_derivation(FormulaSampler& sampler, std::size_t steps);

std::vector<SuiteReport> run_selftest(const SelftestScale& scale);

}  // namespace belnap

#endif  // BELNAP_INVARIANTS_HPP
