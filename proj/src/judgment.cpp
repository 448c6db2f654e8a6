#include "belnap/judgment.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace belnap {

std::string_view position_name(Position p) noexcept {
  switch (p) {
    case Position::gamma: return "gamma";
    case Position::psi: return "psi";
    case Position::phi: return "phi";
    case Position::delta: return "delta";
  }
  return "?";
}

std::optional<Position> position_from_name(std::string_view name) noexcept {
  for (Position p : kAllPositions)
    if (position_name(p) == name) return p;
  return std::nullopt;
}

FormulaSet& Judgment::at(Position p) noexcept {
  switch (p) {
    case Position::gamma: return gamma;
    case Position::psi: return psi;
    case Position::phi: return phi;
    case Position::delta: return delta;
  }
  return gamma;
}

const FormulaSet& Judgment::at(Position p) const noexcept {
  return const_cast<Judgment*>(this)->at(p);
}

std::set<std::string> Judgment::atoms() const {
  std::set<std::string> out;
  for (Position p : kAllPositions) out.merge(belnap::atoms(at(p)));
  return out;
}

std::size_t Judgment::connectives() const {
  std::size_t n = 0;
  for (Position p : kAllPositions)
    for (const auto& f : at(p)) n += f.connectives();
  return n;
}

bool Judgment::is_atomic() const {
  return std::all_of(kAllPositions.begin(), kAllPositions.end(), [this](Position p) {
    return std::all_of(at(p).begin(), at(p).end(), [](const Formula& f) { return f.is_atom(); });
  });
}

bool Judgment::empty() const {
  return gamma.empty() && psi.empty() && phi.empty() && delta.empty();
}

bool Judgment::subset_of(const Judgment& other) const {
  return std::all_of(kAllPositions.begin(), kAllPositions.end(), [&](Position p) {
    return std::includes(other.at(p).begin(), other.at(p).end(), at(p).begin(), at(p).end());
  });
}

bool refutes(const Agent& s, const Judgment& j) {
  for (Position p : kAllPositions) {
    Attitude a = attitude_of(p);
    for (const auto& f : j.at(p))
      if (!holds(s, f, a)) return false;
  }
  return true;
}

namespace {

struct Segment {
  std::string_view text;
  std::size_t offset;
};

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::vector<Segment> split(Segment s, char sep) {
  std::vector<Segment> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.text.find(sep, start);
    if (at == std::string_view::npos) {
      out.push_back({s.text.substr(start), s.offset + start});
      return out;
    }
    out.push_back({s.text.substr(start, at - start), s.offset + start});
    start = at + 1;
  }
}

FormulaSet parse_list(Segment s) {
  FormulaSet out;
  if (blank(s.text)) return out;
  for (const Segment& item : split(s, ',')) {
    if (blank(item.text)) throw ParseError(item.offset, "formula", "empty list item");
    try {
      out.insert(parse_formula(item.text));
    } catch (const ParseError& e) {
      throw ParseError(item.offset + e.offset(), e.expected(), e.found());
    }
  }
  return out;
}

// Splits one side of the turnstile into its outer and inner slot.
std::pair<Segment, Segment> two_slots(Segment side) {
  std::vector<Segment> parts = split(side, ':');
  if (parts.size() < 2) {
    throw ParseError(side.offset + side.text.size(), "':' separating the two slots of this side",
                     side.text.empty() ? "end of side" : "no ':'");
  }
  for (std::size_t i = 1; i + 1 < parts.size(); ++i) {
    if (!blank(parts[i].text)) {
      throw ParseError(parts[i].offset, "at most one non-empty slot between ':' separators",
                       "'" + std::string(parts[i].text) + "'");
    }
  }
  return {parts.front(), parts.back()};
}

}  // namespace

FormulaSet parse_formula_list(std::string_view text) { return parse_list({text, 0}); }

Judgment parse_judgment(std::string_view text) {
  std::size_t turnstile = text.find("|-");
  std::size_t width = 2;
  if (turnstile == std::string_view::npos) {
    turnstile = text.find("⊢");
    width = std::string_view("⊢").size();
  }
  if (turnstile == std::string_view::npos) throw ParseError(text.size(), "'|-'", "end of input");
  std::size_t second = text.find("|-", turnstile + width);
  if (second != std::string_view::npos) throw ParseError(second, "a single '|-'", "another '|-'");

  Segment left{text.substr(0, turnstile), 0};
  Segment right{text.substr(turnstile + width), turnstile + width};
  auto [gamma, psi] = two_slots(left);
  auto [phi, delta] = two_slots(right);

  Judgment j;
  j.gamma = parse_list(gamma);
  j.psi = parse_list(psi);
  j.phi = parse_list(phi);
  j.delta = parse_list(delta);
  return j;
}

std::string format_formula_list(const FormulaSet& fs) {
  std::string out;
  for (const auto& f : fs) {
    if (!out.empty()) out += ", ";
    out += render(f);
  }
  return out;
}

std::string format_judgment(const Judgment& j) {
  auto side = [](const FormulaSet& outer_first, const FormulaSet& second) {
    std::string out = format_formula_list(outer_first);
    if (!out.empty()) out += ' ';
    out += ':';
    if (!second.empty()) out += ' ' + format_formula_list(second);
    return out;
  };
  return side(j.gamma, j.psi) + " |- " + side(j.phi, j.delta);
}

}  // namespace belnap
