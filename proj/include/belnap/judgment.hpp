#ifndef BELNAP_JUDGMENT_HPP
#define BELNAP_JUDGMENT_HPP

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "belnap/agent.hpp"
#include "belnap/formula.hpp"

namespace belnap {

// The four slots of <gamma : psi |- phi : delta>. Each slot carries the
// attitude a refuting agent must hold towards every formula in it.
enum class Position { gamma, psi, phi, delta };

inline constexpr std::array<Position, 4> kAllPositions{Position::gamma, Position::psi,
                                                       Position::phi, Position::delta};

constexpr Attitude attitude_of(Position p) noexcept {
  switch (p) {
    case Position::gamma: return Attitude::accept;
    case Position::psi: return Attitude::not_reject;
    case Position::phi: return Attitude::reject;
    case Position::delta: return Attitude::not_accept;
  }
  return Attitude::accept;
}

std::string_view position_name(Position p) noexcept;
std::optional<Position> position_from_name(std::string_view name) noexcept;

// Four finite formula sets. Used both as a semantic B-judgment and as a
// B-sequent; validity of either means no agent refutes it.
struct Judgment {
  FormulaSet gamma;
  FormulaSet psi;
  FormulaSet phi;
  FormulaSet delta;

  FormulaSet& at(Position p) noexcept;
  const FormulaSet& at(Position p) const noexcept;

  std::set<std::string> atoms() const;
  std::size_t connectives() const;
  bool is_atomic() const;
  bool empty() const;
  // Componentwise inclusion.
  bool subset_of(const Judgment& other) const;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};

using BJudgment = Judgment;
using BSequent = Judgment;

// True if `s` accepts all of gamma, not-rejects all of psi, rejects all of
// phi and not-accepts all of delta.
bool refutes(const Agent& s, const Judgment& j);

// Text format "G1, G2 : P1 |- F1 : D1, D2". Segments may be empty; "⊢" is
// accepted for "|-". Extra blank segments between the outer ones are
// tolerated, so "a : : |- : b" reads as "a : |- : b".
Judgment parse_judgment(std::string_view text);
// Comma-separated formulas; blank text is the empty set.
FormulaSet parse_formula_list(std::string_view text);
std::string format_judgment(const Judgment& j);
std::string format_formula_list(const FormulaSet& fs);

}  // namespace belnap

#endif  // BELNAP_JUDGMENT_HPP
