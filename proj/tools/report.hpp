#pragma once

// JSON renderings shared by the machine-readable (--machine) output paths.

#include <string>
#include <vector>

#include <json.hpp>

#include "nilspec/lie.hpp"
#include "nilspec/obstruction.hpp"
#include "nilspec/spectra.hpp"

namespace nilspec::cli {

using Json = nlohmann::json;

Json to_json(const QMat& m);
Json to_json(const Poly& p);
Json to_json(const ExpansionVerdict& v);
Json to_json(const ObstructionVerdict& v);
Json to_json(const ExpansionCertificate& c);
Json to_json(const BettiVector& b);

/// "{2, 2}" when the polynomial splits over Q, otherwise "roots of <poly>".
std::string spectrum_string(const Poly& char_poly);

/// Compact single-line dump; nlohmann orders keys, so output is stable.
std::string line(const Json& j);

}  // namespace nilspec::cli
