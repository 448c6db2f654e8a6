#include "belnap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "belnap/entailment.hpp"
#include "belnap/invariants.hpp"
#include "belnap/proof_io.hpp"
#include "belnap/sequent.hpp"

namespace belnap {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "text";
  std::size_t max_atoms = kDefaultMaxAtoms;

  std::string formula;
  std::string agent;
  std::string relation = "b";
  std::string judgment;
  std::string proof_file;
  SelftestScale scale;
};

// A parse error located in one command-line argument.
struct SpanError {
  std::string input;
  ParseError error;
};

void print_span_error(std::ostream& err, const std::string& input, const ParseError& e) {
  err << "error: " << e.what() << '\n';
  err << "  " << input << '\n';
  err << "  " << std::string(std::min(e.offset(), input.size()), ' ') << "^\n";
}

template <typename F>
auto parse_arg(const std::string& input, F&& parse) {
  try {
    return parse(input);
  } catch (const ParseError& e) {
    throw SpanError{input, e};
  }
}

struct InputError {
  std::string message;
};

bool as_json(const Options& o) { return o.format == "json"; }

const char* yes_no(bool b) { return b ? "yes" : "no"; }

json attitudes_json(FourValue v) {
  json out = json::object();
  for (Attitude a : kAllAttitudes) out[std::string(attitude_name(a))] = holds(v, a);
  return out;
}

int cmd_eval(const Options& o, std::ostream& out) {
  Formula f = parse_arg(o.formula, parse_formula);
  Agent s = parse_arg(o.agent, parse_agent);
  for (const auto& atom : atoms(f))
    if (!s.assigns(atom)) throw InputError{"agent assigns no value to atom '" + atom + "'"};
  FourValue v = evaluate(s, f);

  if (as_json(o)) {
    json j{{"formula", render(f)}, {"agent", format_agent(s)}, {"value", std::string(1, value_char(v))},
           {"attitudes", attitudes_json(v)}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "value: " << value_char(v) << '\n';
  for (Attitude a : kAllAttitudes) out << attitude_name(a) << ": " << yes_no(holds(v, a)) << '\n';
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  Formula f = parse_arg(o.formula, parse_formula);
  AgentSpace space = all_agents(atoms(f), o.max_atoms);

  if (as_json(o)) {
    json rows = json::array();
    for (const Agent& s : space) {
      FourValue v = evaluate(s, f);
      json assignment = json::object();
      for (const auto& [atom, value] : s.assignment()) assignment[atom] = std::string(1, value_char(value));
      rows.push_back({{"assignment", assignment}, {"value", std::string(1, value_char(v))},
                      {"attitudes", attitudes_json(v)}});
    }
    out << json{{"formula", render(f)}, {"rows", rows}}.dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::size_t> widths;
  for (const auto& atom : space.atoms()) {
    widths.push_back(std::max<std::size_t>(atom.size(), 1));
    out << std::left << std::setw(int(widths.back())) << atom << ' ';
  }
  std::string name = render(f);
  std::size_t value_width = std::max<std::size_t>(name.size(), 1);
  out << "| " << std::setw(int(value_width)) << name << " |";
  for (Attitude a : kAllAttitudes) out << ' ' << attitude_name(a);
  out << '\n';

  for (const Agent& s : space) {
    for (std::size_t i = 0; i < space.atoms().size(); ++i)
      out << std::setw(int(widths[i])) << value_char(s.value(space.atoms()[i])) << ' ';
    FourValue v = evaluate(s, f);
    out << "| " << std::setw(int(value_width)) << value_char(v) << " |";
    for (std::size_t k = 0; k < kAllAttitudes.size(); ++k) {
      Attitude a = kAllAttitudes[k];
      std::string cell = yes_no(holds(v, a));
      if (k + 1 < kAllAttitudes.size()) cell.resize(attitude_name(a).size(), ' ');
      out << ' ' << cell;
    }
    out << '\n';
  }
  return kExitOk;
}

// "P1, P2 |- C" for the single-conclusion relations.
Judgment parse_short_form(Relation r, const std::string& text) {
  std::size_t turnstile = text.find("|-");
  std::size_t width = 2;
  if (turnstile == std::string::npos) {
    turnstile = text.find("⊢");
    width = std::string_view("⊢").size();
  }
  if (turnstile == std::string::npos) throw ParseError(text.size(), "'|-'", "end of input");
  std::string_view sv(text);
  FormulaSet premises = parse_formula_list(sv.substr(0, turnstile));
  std::size_t start = turnstile + width;
  Formula conclusion = [&] {
    try {
      return parse_formula(sv.substr(start));
    } catch (const ParseError& e) {
      throw ParseError(start + e.offset(), e.expected(), e.found());
    }
  }();
  return relation_judgment(r, premises, conclusion);
}

void check_shape(Relation r, const Judgment& j) {
  Position prem = premise_position(r);
  Position concl = conclusion_position(r);
  for (Position p : kAllPositions) {
    if (p == prem || p == concl || j.at(p).empty()) continue;
    throw InputError{"relation " + std::string(relation_name(r)) + " uses only the " +
                     std::string(position_name(prem)) + " and " + std::string(position_name(concl)) +
                     " slots, but " + std::string(position_name(p)) + " is not empty"};
  }
  if (j.at(concl).size() != 1) {
    throw InputError{"relation " + std::string(relation_name(r)) + " needs exactly one conclusion in " +
                     std::string(position_name(concl)) + ", got " + std::to_string(j.at(concl).size())};
  }
}

int cmd_entail(const Options& o, std::ostream& out) {
  auto r = relation_from_name(o.relation);
  if (!r) throw InputError{"unknown relation '" + o.relation + "' (expected t, f, q, p or b)"};

  Judgment j = parse_arg(o.judgment, [&](const std::string& text) {
    if (*r != Relation::b && text.find(':') == std::string::npos) return parse_short_form(*r, text);
    return parse_judgment(text);
  });
  if (*r != Relation::b) check_shape(*r, j);

  Verdict v = b_entails(j, o.max_atoms);
  if (as_json(o)) {
    json doc = verdict_to_json(v);
    doc["relation"] = std::string(relation_name(*r));
    doc["judgment"] = judgment_to_json(j);
    out << doc.dump(2) << '\n';
  } else {
    out << (v.valid() ? "valid" : "invalid") << ": <" << format_judgment(j) << ">\n";
    if (!v.valid()) out << render_countermodel(*v.countermodel);
  }
  return v.valid() ? kExitOk : kExitRefuted;
}

int cmd_prove(const Options& o, std::ostream& out) {
  BSequent s = parse_arg(o.judgment, parse_judgment);
  ProveResult result = prove(s, o.max_atoms);
  const auto* proof = std::get_if<ProofTree>(&result);

  if (as_json(o)) {
    json doc{{"derivable", proof != nullptr}};
    if (proof)
      doc["proof"] = proof_to_json(*proof);
    else
      doc["countermodel"] = countermodel_to_json(std::get<Countermodel>(result));
    out << doc.dump(2) << '\n';
  } else if (proof) {
    out << "derivable: <" << format_judgment(s) << ">\n" << render_proof(*proof);
  } else {
    out << "not derivable: <" << format_judgment(s) << ">\n"
        << render_countermodel(std::get<Countermodel>(result));
  }
  return proof ? kExitOk : kExitRefuted;
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
  std::string text;
  if (o.proof_file == "-") {
    text.assign(std::istreambuf_iterator<char>(in), {});
  } else {
    std::ifstream file(o.proof_file, std::ios::binary);
    if (!file) throw InputError{"cannot read '" + o.proof_file + "'"};
    text.assign(std::istreambuf_iterator<char>(file), {});
  }

  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError{"'" + o.proof_file + "' is not valid JSON"};
  // Accept the output of `prove --format json` as well as a bare proof tree.
  if (doc.is_object() && doc.contains("proof")) doc = doc["proof"];
  ProofTree t = proof_from_json(doc);
  CheckResult result = check_proof(t);

  if (as_json(o)) {
    json report{{"ok", result.ok}, {"conclusion", judgment_to_json(t.conclusion)}, {"nodes", proof_size(t)}};
    if (!result.ok) {
      report["path"] = result.path;
      report["explanation"] = result.explanation;
    }
    out << report.dump(2) << '\n';
  } else if (result.ok) {
    out << "ok: proof of <" << format_judgment(t.conclusion) << "> (" << proof_size(t) << " nodes)\n";
  } else {
    out << "rejected at node [";
    for (std::size_t i = 0; i < result.path.size(); ++i) out << (i ? "," : "") << result.path[i];
    out << "]: " << result.explanation << '\n';
  }
  return result.ok ? kExitOk : kExitRefuted;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<SuiteReport> reports = run_selftest(o.scale);
  bool all_ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });

  if (as_json(o)) {
    json arr = json::array();
    for (const auto& r : reports) {
      json item{{"name", r.name}, {"cases", r.cases}, {"violations", r.violations}};
      if (!r.ok()) item["first_violation"] = r.first_violation;
      arr.push_back(item);
    }
    out << json{{"ok", all_ok}, {"suites", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.ok() ? "[ok]   " : "[FAIL] ") << r.name << " (" << r.cases << " cases)";
      if (!r.ok()) out << ": " << r.violations << " violation(s), first: " << r.first_violation;
      out << '\n';
    }
  }
  return all_ok ? kExitOk : kExitRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Four-valued entailment, B-sequent prover and proof checker", "belnap"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // global flags may follow the subcommand
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-atoms", o.max_atoms, "Refuse enumeration over more atoms than this")
      ->check(CLI::PositiveNumber);

  auto* eval = app.add_subcommand("eval", "Value and attitudes of a formula under an agent");
  eval->add_option("formula", o.formula, "Formula, e.g. \"~(a | b) & c\"")->required();
  eval->add_option("--agent", o.agent, "Assignment, e.g. \"a=b,b=t,c=n\"")->required();

  auto* table = app.add_subcommand("table", "Truth table over the formula's atoms");
  table->add_option("formula", o.formula)->required();

  auto* entail = app.add_subcommand("entail", "Decide an entailment by enumerating agents");
  entail->add_option("--relation", o.relation, "t, f, q, p or b")->check(CLI::IsMember({"t", "f", "q", "p", "b"}));
  entail->add_option("judgment", o.judgment, "\"G : P |- F : D\", or \"P1, P2 |- C\" for t, f, q, p")
      ->required();

  auto* prove_cmd = app.add_subcommand("prove", "Cut-free proof search with countermodel extraction");
  prove_cmd->add_option("sequent", o.judgment, "\"G : P |- F : D\"")->required();

  auto* check = app.add_subcommand("check", "Validate a JSON proof tree");
  check->add_option("file", o.proof_file, "Proof file, or - for stdin")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the invariant suites");
  selftest->add_option("--depth", o.scale.exhaustive_depth, "Formula depth of the exhaustive suites");
  selftest->add_option("--atoms", o.scale.exhaustive_atoms, "Atoms of the exhaustive suites");
  selftest->add_option("--random", o.scale.random_cases, "Instances per random suite");
  selftest->add_option("--random-depth", o.scale.random_depth);
  selftest->add_option("--random-atoms", o.scale.random_atoms);
  selftest->add_option("--seed", o.scale.seed);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (table->parsed()) return cmd_table(o, out);
    if (entail->parsed()) return cmd_entail(o, out);
    if (prove_cmd->parsed()) return cmd_prove(o, out);
    if (check->parsed()) return cmd_check(o, in, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const SpanError& e) {
    print_span_error(err, e.input, e.error);
    return kExitInputError;
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitInputError;
  } catch (const DomainTooLargeError& e) {
    err << "error: " << e.what() << " (raise --max-atoms to allow it)\n";
    return kExitCapError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace belnap
