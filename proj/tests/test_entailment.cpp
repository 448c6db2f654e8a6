#include <doctest.h>

#include "belnap/errors.hpp"
#include "belnap/generate.hpp"
#include "fixed_cases.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace belnap;

TEST_CASE("fixed cases: verdicts and first countermodels") {
  for (const auto& c : kFixedCases) {
    CAPTURE(c.judgment);
    Judgment j = J(c.judgment);
    Verdict v = b_entails(j);
    CHECK(v.valid() == c.valid);
    CHECK(oracle::valid(j) == c.valid);
    if (!v.valid()) {
      CHECK(format_agent(v.countermodel->agent) == c.first_countermodel);
      CHECK(refutes(v.countermodel->agent, j));
      CHECK(oracle::refutes(oracle::from_agent(v.countermodel->agent), j));
    }
  }
}

TEST_CASE("b_entails agrees with the oracle on random judgments") {
  FormulaSampler sampler({"a", "b", "c"}, 3, 7);
  for (int i = 0; i < 500; ++i) {
    Judgment j = sampler.judgment(2);
    CAPTURE(format_judgment(j));
    CHECK(b_entails(j).valid() == oracle::valid(j));
  }
}

TEST_CASE("countermodel report lists every formula with its demanded attitude") {
  Verdict v = b_entails(J("a & ~a : |- : b"));
  REQUIRE_FALSE(v.valid());
  const auto& report = v.countermodel->report;
  REQUIRE(report.size() == 2);
  CHECK(report[0].formula == F("a & ~a"));
  CHECK(report[0].position == Position::gamma);
  CHECK(report[0].attitude == Attitude::accept);
  CHECK(report[0].value == kBoth);
  CHECK(report[1].formula == F("b"));
  CHECK(report[1].attitude == Attitude::not_accept);
  CHECK(report[1].value == kFalse);
}

TEST_CASE("the empty judgment is refuted by the empty agent") {
  Verdict v = b_entails(Judgment{});
  REQUIRE_FALSE(v.valid());
  CHECK(v.countermodel->agent == Agent{});
  CHECK(v.countermodel->report.empty());
}

TEST_CASE("enumeration cap") {
  Judgment j = J("a, b, c : |- : d");
  CHECK_THROWS_AS(b_entails(j, 3), DomainTooLargeError);
  CHECK_NOTHROW(b_entails(j, 4));
}

TEST_CASE("single-conclusion relations and their judgment shapes") {
  FormulaSet premises{F("a & b")};
  Formula a = F("a");
  CHECK(relation_judgment(Relation::t, premises, a) == J("a & b : |- : a"));
  CHECK(relation_judgment(Relation::f, premises, a) == J(": a & b |- a :"));
  CHECK(relation_judgment(Relation::q, premises, a) == J(": a & b |- : a"));
  CHECK(relation_judgment(Relation::p, premises, a) == J("a & b : |- a :"));
  CHECK(entails_t(premises, a).valid());
  CHECK(entails_f(premises, a).valid());
  CHECK(entails_t({a}, F("a | b")).valid());
  CHECK(entails_f({a}, F("a | b")).valid());
}

// Both mixed relations are empty: the all-n agent refutes every q-judgment
// and the all-b agent every p-judgment.
TEST_CASE("q and p have no valid instances") {
  Verdict q = entails_q({F("a & b")}, F("a"));
  REQUIRE_FALSE(q.valid());
  CHECK(format_agent(q.countermodel->agent) == "a=n,b=n");
  Verdict p = entails_p({F("a")}, F("a | b"));
  REQUIRE_FALSE(p.valid());
  CHECK(format_agent(p.countermodel->agent) == "a=b,b=f");
  CHECK_FALSE(entails_q({F("a")}, F("a")).valid());
  CHECK_FALSE(entails_p({F("a")}, F("a")).valid());

  auto formulas = formulas_up_to_depth({"a", "b"}, 2);
  Agent all_n = A("a=n,b=n");
  Agent all_b = A("a=b,b=b");
  for (const auto& x : formulas)
    for (const auto& y : formulas) {
      CHECK(refutes(all_n, relation_judgment(Relation::q, {x}, y)));
      CHECK(refutes(all_b, relation_judgment(Relation::p, {x}, y)));
    }
}

TEST_CASE("t and f agree and match the infimum formulation") {
  auto formulas = formulas_up_to_depth({"a", "b"}, 2);
  for (const auto& x : formulas)
    for (const auto& y : formulas) {
      bool t = entails_t({x}, y).valid();
      CHECK(t == entails_f({x}, y).valid());
      CHECK(t == entails_by_infimum({x}, y));
    }
  // No premises: the infimum of nothing is t.
  CHECK_FALSE(entails_by_infimum({}, F("a | ~a")));
  CHECK(entails_by_infimum({F("a"), F("b")}, F("a & b")));
}

TEST_CASE("relation names") {
  CHECK(relation_from_name("t") == Relation::t);
  CHECK(relation_from_name("b") == Relation::b);
  CHECK_FALSE(relation_from_name("x").has_value());
  CHECK(relation_name(Relation::q) == "q");
  CHECK(premise_position(Relation::f) == Position::psi);
  CHECK(conclusion_position(Relation::p) == Position::phi);
  CHECK_THROWS(premise_position(Relation::b));
}

TEST_CASE("judgment text") {
  Judgment j = J("~(a | b) : |- : ~a & ~b");
  CHECK(j.gamma == FormulaSet{F("~(a | b)")});
  CHECK(j.delta == FormulaSet{F("~a & ~b")});
  CHECK(j.psi.empty());
  CHECK(format_judgment(j) == "~(a | b) : |- : ~a & ~b");
  CHECK(format_judgment(Judgment{}) == ": |- :");
  CHECK(J("a : : |- : b") == J("a : |- : b"));
  CHECK(J("a : ⊢ : b") == J("a : |- : b"));
  CHECK_THROWS_AS(J("a ⊢ : b"), ParseError);
  CHECK_THROWS_AS(J("a : x : |- :"), ParseError);
  CHECK_THROWS_AS(J("a : |- : b |- c"), ParseError);
  try {
    J(": a, (b |- :");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 8);
  }
}

TEST_CASE("per-relation examples") {
  Formula a = F("a");
  CHECK(entails_f({a}, a).valid());
  CHECK(entails_f({a, F("b")}, F("a & b")).valid());
  CHECK_FALSE(entails_f({F("b")}, F("~a | a")).valid());
  Verdict q = entails_q({a}, a);
  REQUIRE_FALSE(q.valid());
  CHECK(q.countermodel->agent.value("a") == kNeither);
  CHECK_FALSE(entails_q({}, F("a | ~a")).valid());
  Verdict p = entails_p({a}, a);
  REQUIRE_FALSE(p.valid());
  CHECK(p.countermodel->agent.value("a") == kBoth);
  CHECK_FALSE(entails_p({F("a & ~a")}, F("b")).valid());
}
