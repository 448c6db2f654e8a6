#include "belnap/proof_io.hpp"

#include <sstream>

namespace belnap {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string(what) + " is missing \"" + key + "\"");
  return *it;
}

std::string string_field(const json& j, const char* key, const char* what) {
  const json& v = field(j, key, what);
  if (!v.is_string()) throw FormatError(std::string(what) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

json formula_list(const FormulaSet& fs) {
  json arr = json::array();
  for (const auto& f : fs) arr.push_back(render(f));
  return arr;
}

void render_rec(const ProofTree& t, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << format_judgment(t.conclusion) << "    [" << rule_name(t.rule);
  if (t.principal) out << ' ' << render(t.principal->formula);
  out << "]\n";
  for (const auto& p : t.premises) render_rec(p, depth + 1, out);
}

}  // namespace

json judgment_to_json(const Judgment& j) {
  json out = json::object();
  for (Position p : kAllPositions) out[std::string(position_name(p))] = formula_list(j.at(p));
  return out;
}

Judgment judgment_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("sequent must be a JSON object");
  Judgment out;
  for (Position p : kAllPositions) {
    std::string key(position_name(p));
    auto it = j.find(key);
    if (it == j.end()) continue;
    if (!it->is_array()) throw FormatError("sequent slot \"" + key + "\" must be an array");
    for (const auto& item : *it) {
      if (!item.is_string()) throw FormatError("sequent slot \"" + key + "\" must hold strings");
      out.at(p).insert(parse_formula(item.get<std::string>()));
    }
  }
  return out;
}

json proof_to_json(const ProofTree& t) {
  json out;
  out["conclusion"] = judgment_to_json(t.conclusion);
  out["rule"] = std::string(rule_name(t.rule));
  if (t.principal) {
    out["principal"] = {{"position", std::string(position_name(t.principal->position))},
                        {"formula", render(t.principal->formula)}};
  } else {
    out["principal"] = nullptr;
  }
  out["premises"] = json::array();
  for (const auto& p : t.premises) out["premises"].push_back(proof_to_json(p));
  return out;
}

ProofTree proof_from_json(const json& j) {
  std::string rule = string_field(j, "rule", "proof node");
  auto r = rule_from_name(rule);
  if (!r) throw FormatError("unknown rule \"" + rule + "\"");

  ProofTree t{judgment_from_json(field(j, "conclusion", "proof node")), *r, std::nullopt, {}};

  if (auto it = j.find("principal"); it != j.end() && !it->is_null()) {
    std::string pos = string_field(*it, "position", "principal");
    auto p = position_from_name(pos);
    if (!p) throw FormatError("unknown position \"" + pos + "\"");
    t.principal = Occurrence{*p, parse_formula(string_field(*it, "formula", "principal"))};
  }

  if (auto it = j.find("premises"); it != j.end()) {
    if (!it->is_array()) throw FormatError("\"premises\" must be an array");
    for (const auto& child : *it) t.premises.push_back(proof_from_json(child));
  }
  return t;
}

json countermodel_to_json(const Countermodel& cm) {
  json assignment = json::object();
  for (const auto& [atom, value] : cm.agent.assignment())
    assignment[atom] = std::string(1, value_char(value));
  json report = json::array();
  for (const auto& e : cm.report) {
    report.push_back({{"formula", render(e.formula)},
                      {"position", std::string(position_name(e.position))},
                      {"attitude", std::string(attitude_name(e.attitude))},
                      {"value", std::string(1, value_char(e.value))}});
  }
  return {{"assignment", assignment}, {"report", report}};
}

json verdict_to_json(const Verdict& v) {
  json out;
  out["valid"] = v.valid();
  out["countermodel"] = v.valid() ? json(nullptr) : countermodel_to_json(*v.countermodel);
  return out;
}

std::string render_proof(const ProofTree& t) {
  std::ostringstream out;
  render_rec(t, 0, out);
  return out.str();
}

std::string render_countermodel(const Countermodel& cm) {
  std::ostringstream out;
  out << "countermodel: " << (cm.agent.assignment().empty() ? "(empty agent)" : format_agent(cm.agent)) << '\n';
  for (const auto& e : cm.report) {
    out << "  " << attitude_name(e.attitude) << ' ' << render(e.formula) << "  (" << position_name(e.position)
        << ", value " << value_char(e.value) << ")\n";
  }
  return out.str();
}

}  // namespace belnap
