#ifndef BELNAP_FORMULA_HPP
#define BELNAP_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "belnap/errors.hpp"

namespace belnap {

enum class Connective : unsigned char { atom, negation, conjunction, disjunction };

// Immutable propositional formula over ~, & and |. Copies share structure,
// so passing by value is cheap. Equality and ordering are structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);

  Connective connective() const noexcept;
  bool is_atom() const noexcept { return connective() == Connective::atom; }

  // Atom name; empty for compound formulas.
  const std::string& name() const noexcept;
  // Operand of a negation.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  // Height of the syntax tree. An atom has depth 1.
  std::size_t depth() const noexcept;
  // Number of connective occurrences.
  std::size_t connectives() const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  // Canonical total order: atom < negation < conjunction < disjunction, then
  // atom names, then children left to right.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using FormulaSet = std::set<Formula>;

// True if `name` belongs to the atom lexical class [a-z][A-Za-z0-9_]*.
bool is_atom_name(std::string_view name) noexcept;

// Parses a formula. Precedence is ~ over & over |, binaries associate to the
// left. The Unicode connectives ¬ ∧ ∨ are accepted as synonyms.
Formula parse_formula(std::string_view text);

// ASCII rendering with the minimal parentheses that parse back to `f`.
std::string render(const Formula& f);

std::set<std::string> atoms(const Formula& f);
std::set<std::string> atoms(const FormulaSet& fs);

}  // namespace belnap

#endif  // BELNAP_FORMULA_HPP
