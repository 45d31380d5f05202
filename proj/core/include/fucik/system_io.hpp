#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fucik/certify.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/envelope.hpp"
#include "fucik/gram.hpp"

namespace fucik {

using Json = nlohmann::ordered_json;

// System spec schema:
//   { "entries": [ {"n": 2, "alpha": 5.0}, {"n": 3, "alpha": 10.5, "beta": ...}, ... ],
//     "split": "default" | "auto" | [2, 4, ...],
//     "mode": "theorem1" | "remark",
//     "tail": "identity" }
// Only "entries" is required. A missing beta is solved from alpha (and vice
// versa); when both are given the point is membership-checked.
SystemSpec parse_system_spec(const Json& doc);
SystemSpec parse_system_spec_text(const std::string& text);
SystemSpec load_system_spec(const std::string& path);

/// Split rule from its textual form: "default", "auto" or "2,4,6".
SplitRule parse_split(const std::string& text);
Mode parse_mode(const std::string& text);

/// Rounds to 12 significant digits so serialized output is stable.
double round12(double v);

Json serialize(const Certificate& cert);
Json serialize(const PiecewiseEigenfunction& f);
Json serialize(const GramWitness& w);
Json serialize(const EnvelopeEval& e);

}  // namespace fucik
