#pragma once

#include <string>

#include "json.hpp"

#include "critex/automaton.hpp"
#include "critex/pants.hpp"
#include "critex/rep.hpp"
#include "critex/weyl.hpp"

// JSON ingestion and emission for the library types.
//
// Functional: {"basis": "roots"|"weights"|"raw", "coeffs": [...]}
// Graph: {"vertices": [...], "start": id, "edges": [{"from","to","label"}]}
// Representation: {"n": 2|3, "generators": {"a": [[...]], ...}}
// FGParams: {"X": [X1,X2], "Z": [Z1,Z2,Z3], "W": [W1,W2,W3]},
//   optionally {"mode": "shear", "t": ...} applied on top.

namespace critex {

Functional parse_functional(const nlohmann::json& j);
LabeledGraph parse_graph(const nlohmann::json& j);
Representation parse_representation(const nlohmann::json& j);
FGParams parse_fg_params(const nlohmann::json& j);

nlohmann::json to_json(const SeparationCertificate& cert);
nlohmann::json to_json(const ExponentReport& report);

nlohmann::json load_json_file(const std::string& path);

}  // namespace critex
