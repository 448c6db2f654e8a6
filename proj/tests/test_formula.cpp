#include <doctest.h>

#include "belnap/errors.hpp"
#include "belnap/generate.hpp"
#include "helpers.hpp"

using namespace belnap;

TEST_CASE("precedence: ~ binds tighter than &, & tighter than |") {
  Formula f = F("~a & b | c");
  REQUIRE(f.connective() == Connective::disjunction);
  CHECK(f.right() == Formula::atom("c"));
  CHECK(f.left().connective() == Connective::conjunction);
  CHECK(f.left().left() == Formula::negation(Formula::atom("a")));
}

TEST_CASE("binary connectives associate to the left") {
  Formula f = F("a & b & c");
  CHECK(f == Formula::conjunction(Formula::conjunction(Formula::atom("a"), Formula::atom("b")),
                                  Formula::atom("c")));
  CHECK(render(F("a & (b & c)")) == "a & (b & c)");
  CHECK(render(F("(a & b) & c")) == "a & b & c");
  CHECK(render(F("(a | b) | c")) == "a | b | c");
}

TEST_CASE("render uses minimal parentheses") {
  CHECK(render(F("((a))")) == "a");
  CHECK(render(F("~(a | b)")) == "~(a | b)");
  CHECK(render(F("(~a) & (~b)")) == "~a & ~b");
  CHECK(render(F("(a & b) | c")) == "a & b | c");
  CHECK(render(F("a & (b | c)")) == "a & (b | c)");
  CHECK(render(F("~~a")) == "~~a");
  CHECK(render(F("(a | c) & (b | c)")) == "(a | c) & (b | c)");
}

TEST_CASE("Unicode connectives are synonyms") {
  CHECK(F("¬a") == F("~a"));
  CHECK_THROWS_AS(F("¬α"), ParseError);
  CHECK(F("¬(a ∨ b) ∧ c") == F("~(a | b) & c"));
}

TEST_CASE("render round-trips every small formula") {
  for (const auto& f : formulas_up_to_depth({"a", "b"}, 3)) CHECK(F(render(f)) == f);
}

TEST_CASE("atom names") {
  CHECK(is_atom_name("p"));
  CHECK(is_atom_name("p_1"));
  CHECK(is_atom_name("pQ2"));
  CHECK_FALSE(is_atom_name(""));
  CHECK_FALSE(is_atom_name("P"));
  CHECK_FALSE(is_atom_name("1p"));
  CHECK_THROWS_AS(Formula::atom("X"), Error);
}

TEST_CASE("parse errors carry the offending offset") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("a &") == 3);
  CHECK(offset_of("a & (b | c") == 10);
  CHECK(offset_of("a b") == 2);
  CHECK(offset_of("a & )") == 4);
  CHECK(offset_of("a & B") == 4);
  CHECK(offset_of("a # b") == 2);
}

TEST_CASE("depth and connective counts") {
  CHECK(F("a").depth() == 1);
  CHECK(F("~a").depth() == 2);
  CHECK(F("~(a | b) & c").depth() == 4);
  CHECK(F("~(a | b) & c").connectives() == 3);
  CHECK(F("a").connectives() == 0);
}

TEST_CASE("atoms") {
  CHECK(atoms(F("~(b | a) & b")) == std::set<std::string>{"a", "b"});
  CHECK(atoms(FormulaSet{F("a"), F("c & d")}) == std::set<std::string>{"a", "c", "d"});
}

TEST_CASE("canonical order") {
  CHECK(F("a") < F("b"));
  CHECK(F("b") < F("~a"));
  CHECK(F("~b") < F("a & a"));
  CHECK(F("a & b") < F("a | a"));
  CHECK(F("a & b") < F("b & a"));
  FormulaSet s{F("b"), F("a"), F("a")};
  CHECK(s.size() == 2);
}

TEST_CASE("formula enumeration sizes") {
  CHECK(formulas_up_to_depth({"a", "b"}, 1).size() == 2);
  CHECK(formulas_up_to_depth({"a", "b"}, 2).size() == 12);
  CHECK(formulas_up_to_depth({"a", "b"}, 3).size() == 302);
  auto d3 = formulas_up_to_depth({"a", "b"}, 3);
  CHECK(std::set<Formula>(d3.begin(), d3.end()).size() == d3.size());
  for (const auto& f : d3) CHECK(f.depth() <= 3);
}
