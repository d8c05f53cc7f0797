#pragma once

#include <string>

#include <json.hpp>

#include "tautilt/tautilt.hpp"

namespace tautilt::cli {

using nlohmann::json;

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols);

/// {"algebra": fingerprint, "dims": [...], "arrows": {"a": [[...], ...], ...}}; entries are rational strings.
json to_json(const Representation& m);
/// Accepts integer or "p/q" string entries. Throws ParseError on malformed input.
Representation representation_from_json(const AlgebraPtr& a, const json& j);

json to_json(const ARQuiverData& ar);
ARQuiverData ar_quiver_from_json(const AlgebraPtr& a, const json& j);

json hasse_json(const ARIndex& ix, const HasseQuiver& h);
json oracle_json(const ARIndex& ix, const std::vector<ModuleClass>& classes);

/// Nodes sorted by label; irreducible maps solid, tau^- dashed.
std::string ar_quiver_dot(const ARQuiverData& ar);
/// Nodes sorted by label; arrows from the larger torsion class to the smaller.
std::string hasse_dot(const ARIndex& ix, const HasseQuiver& h);

/// One row per torsion class: members of T, then members of F.
std::string oracle_table(const ARIndex& ix, const std::vector<ModuleClass>& classes);

}  // namespace tautilt::cli
