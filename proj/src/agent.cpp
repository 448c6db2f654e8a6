#include "belnap/agent.hpp"

#include <cctype>

namespace belnap {

std::string_view attitude_name(Attitude a) noexcept {
  switch (a) {
    case Attitude::accept: return "accept";
    case Attitude::not_accept: return "not-accept";
    case Attitude::reject: return "reject";
    case Attitude::not_reject: return "not-reject";
  }
  return "?";
}

Agent::Agent(Assignment assignment) : assignment_(std::move(assignment)) {
  for (const auto& [atom, value] : assignment_) {
    if (!is_atom_name(atom)) throw Error("invalid atom name '" + atom + "'");
  }
}

std::set<std::string> Agent::domain() const {
  std::set<std::string> out;
  for (const auto& entry : assignment_) out.insert(entry.first);
  return out;
}

bool Agent::assigns(std::string_view atom) const { return assignment_.contains(atom); }

FourValue Agent::value(std::string_view atom) const {
  auto it = assignment_.find(atom);
  if (it == assignment_.end()) throw UnknownAtomError(std::string(atom));
  return it->second;
}

FourValue evaluate(const Agent& s, const Formula& f) {
  switch (f.connective()) {
    case Connective::atom: return s.value(f.name());
    case Connective::negation: return neg_t(evaluate(s, f.operand()));
    case Connective::conjunction: return meet_t(evaluate(s, f.left()), evaluate(s, f.right()));
    case Connective::disjunction: return join_t(evaluate(s, f.left()), evaluate(s, f.right()));
  }
  return kNeither;
}

bool holds(const Agent& s, const Formula& f, Attitude a) { return holds(evaluate(s, f), a); }

Agent star(const Agent& s) {
  Agent::Assignment out;
  for (const auto& [atom, value] : s.assignment()) out.emplace(atom, conflate(value));
  return Agent(std::move(out));
}

AgentSpace::AgentSpace(const std::set<std::string>& domain, std::size_t max_atoms)
    : atoms_(domain.begin(), domain.end()) {
  if (atoms_.size() > max_atoms) throw DomainTooLargeError(max_atoms, atoms_.size());
  if (atoms_.size() > 31) throw DomainTooLargeError(31, atoms_.size());
  size_ = std::uint64_t{1} << (2 * atoms_.size());
}

void AgentSpace::values_at(std::uint64_t index, std::vector<FourValue>& out) const {
  out.resize(atoms_.size());
  for (std::size_t k = atoms_.size(); k-- > 0;) {
    out[k] = kAllValues[index & 3u];
    index >>= 2;
  }
}

Agent AgentSpace::operator[](std::uint64_t index) const {
  std::vector<FourValue> values;
  values_at(index, values);
  Agent::Assignment a;
  for (std::size_t k = 0; k < atoms_.size(); ++k) a.emplace(atoms_[k], values[k]);
  return Agent(std::move(a));
}

AgentSpace all_agents(const std::set<std::string>& domain, std::size_t max_atoms) {
  return AgentSpace(domain, max_atoms);
}

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Agent parse_agent(std::string_view text) {
  Agent::Assignment out;
  std::size_t start = 0;
  {
    std::size_t off = 0;
    if (trim(text, off).empty()) return Agent();
  }
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start);
    std::size_t off = start;
    item = trim(item, off);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError(off, "'atom=value'", item.empty() ? "empty item" : "'" + std::string(item) + "'");
    }
    std::size_t atom_off = off;
    std::string_view atom = trim(item.substr(0, eq), atom_off);
    std::size_t value_off = off + eq + 1;
    std::string_view value = trim(item.substr(eq + 1), value_off);
    if (!is_atom_name(atom)) throw ParseError(atom_off, "atom name", "'" + std::string(atom) + "'");
    auto v = value_from_name(value);
    if (!v) throw ParseError(value_off, "one of f, n, b, t", "'" + std::string(value) + "'");
    if (!out.emplace(std::string(atom), *v).second) {
      throw ParseError(atom_off, "each atom assigned once", "'" + std::string(atom) + "' again");
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Agent(std::move(out));
}

std::string format_agent(const Agent& s) {
  std::string out;
  for (const auto& [atom, value] : s.assignment()) {
    if (!out.empty()) out += ',';
    out += atom;
    out += '=';
    out += value_char(value);
  }
  return out;
}

}  // namespace belnap
