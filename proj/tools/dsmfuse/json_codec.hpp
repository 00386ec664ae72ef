#pragma once

// JSON encodings shared by scenario files and reports. Propositions are
// nested arrays of singleton names: [["p","nf"],["b","f"]] is (p∩nf)∪(b∩f)
// and [] is ∅.

#include <string>

#include "json.hpp"

#include "dsmfuse/belief.hpp"
#include "dsmfuse/lattice.hpp"

namespace dsmfuse::cli {

using Json = nlohmann::ordered_json;

[[nodiscard]] Json proposition_to_json(const Proposition& p, const Frame& frame);
/// `path` names the field in error messages, e.g. "rules[2].then".
[[nodiscard]] Proposition proposition_from_json(const Json& j, const Frame& frame, const std::string& path);

/// {"masses": [{"prop": ..., "mass": ...}]}
[[nodiscard]] Json bba_to_json(const Bba& bba);
[[nodiscard]] Bba bba_from_json(const Json& j, const Model& model, const std::string& path);

/// BBA encoding plus "conflict_mass" and "normalization_constant" (null
/// when the rule does not normalize).
[[nodiscard]] Json combination_report_to_json(const CombinationReport& report);

[[nodiscard]] Json model_to_json(const Model& model);
[[nodiscard]] Model model_from_json(const Json& j, const std::string& path);

}  // namespace dsmfuse::cli
