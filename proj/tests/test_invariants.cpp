#include <doctest.h>

#include <functional>
#include <set>

#include "belnap/invariants.hpp"

using namespace belnap;

namespace {

SelftestScale small() {
  SelftestScale s;
  s.random_cases = 200;
  s.random_depth = 3;
  return s;
}

}  // namespace

TEST_CASE("algebraic suites") {
  for (const auto& r : {check_lattice_laws(), check_bilattice_axioms(), check_bifilters()}) {
    CAPTURE(r.name);
    CHECK_MESSAGE(r.ok(), r.first_violation);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("exhaustive suites at depth 2") {
  for (const auto& r : {check_clauses(2, 2), check_infimum_equivalence(2, 2), check_collapse(2, 2)}) {
    CAPTURE(r.name);
    CHECK_MESSAGE(r.ok(), r.first_violation);
  }
  CHECK(check_clauses(2, 2).cases == 12 * 16);
}

TEST_CASE("random suites") {
  SelftestScale s = small();
  for (const auto& r : check_b_properties(s)) {
    CAPTURE(r.name);
    CHECK_MESSAGE(r.ok(), r.first_violation);
    CHECK(r.cases == s.random_cases);
  }
  for (const auto& r : {check_prover_random(s), check_star_duality(s), check_invertibility(s),
                        check_derivation_soundness(s)}) {
    CAPTURE(r.name);
    CHECK_MESSAGE(r.ok(), r.first_violation);
  }
}

TEST_CASE("random derivations exercise every rule") {
  FormulaSampler sampler(atom_names(3), 3, 99);
  std::set<Rule> seen;
  std::function<void(const ProofTree&)> collect = [&](const ProofTree& t) {
    seen.insert(t.rule);
    for (const auto& p : t.premises) collect(p);
  };
  for (int i = 0; i < 500; ++i) {
    ProofTree t = random_derivation(sampler, 5);
    REQUIRE(check_proof(t).ok);
    collect(t);
  }
  CHECK(seen.size() == 17);
}

TEST_CASE("suite reports keep the first violation") {
  SuiteReport r("x");
  CHECK(r.ok());
  r.fail("first");
  r.fail("second");
  CHECK(r.violations == 2);
  CHECK(r.first_violation == "first");
}

TEST_CASE("atom names") {
  CHECK(atom_names(3) == std::vector<std::string>{"a", "b", "c"});
}
