#pragma once

// JSON encodings used by the command line tool.
//
//   matrix: {"d_rows": n, "d_cols": m, "re": [[...], ...], "im": [[...], ...]}
//   kraus:  {"d": n, "kraus": [matrix, ...]}
//   three unitaries for a mixture scan: {"unitaries": [matrix, matrix, matrix]}
//
// Decoding errors throw InputError with the offending field in the message.

#include <vector>

#include <json.hpp>

#include "cgp/channel.hpp"
#include "cgp/matrix_core.hpp"

namespace cgp::io {

nlohmann::json matrix_to_json(const CMat& m);
CMat matrix_from_json(const nlohmann::json& j);

nlohmann::json kraus_to_json(const KrausChannel& e);
/// Decodes the raw operator list; does not check the channel axioms.
std::vector<CMat> kraus_operators_from_json(const nlohmann::json& j);
KrausChannel kraus_from_json(const nlohmann::json& j);

std::vector<CMat> unitaries_from_json(const nlohmann::json& j);

nlohmann::json read_json_file(const std::string& path);

}  // namespace cgp::io
