#ifndef BELNAP_PROOF_IO_HPP
#define BELNAP_PROOF_IO_HPP

#include <string>

#include <json.hpp>

#include "belnap/entailment.hpp"
#include "belnap/sequent.hpp"

namespace belnap {

// JSON schemas (stable):
//   sequent:      {"gamma": [str], "psi": [str], "phi": [str], "delta": [str]}
//   proof tree:   {"conclusion": sequent, "rule": str,
//                  "principal": {"position": str, "formula": str} | null,
//                  "premises": [proof tree]}
//   countermodel: {"assignment": {atom: "f"|"n"|"b"|"t"},
//                  "report": [{"formula", "position", "attitude", "value"}]}
//   verdict:      {"valid": bool, "countermodel": countermodel | null}
nlohmann::json judgment_to_json(const Judgment& j);
Judgment judgment_from_json(const nlohmann::json& j);

nlohmann::json proof_to_json(const ProofTree& t);
// Throws FormatError on schema violations and ParseError on bad formulas.
ProofTree proof_from_json(const nlohmann::json& j);

nlohmann::json countermodel_to_json(const Countermodel& cm);
nlohmann::json verdict_to_json(const Verdict& v);

// Indented rendering, one sequent per line, conclusion first:
//   <sequent>    [Rule principal]
std::string render_proof(const ProofTree& t);
std::string render_countermodel(const Countermodel& cm);

}  // namespace belnap

#endif  // BELNAP_PROOF_IO_HPP
