#pragma once

#include <string_view>

#include "dsmfuse/rulebase.hpp"

namespace dsmfuse::cli {

/// Parses and validates a scenario document:
///
///   {"frame": [names], "constraints": [[names]],
///    "rules": [{"if": prop, "then": prop, "weight": num}],
///    "observations": [prop], "queries": [prop], "engines": [..],
///    "dst_axes": {"axes": [[names]], "map": {singleton: [axis, value]}}}
///
/// "constraints", "observations" and "dst_axes" are optional; "engines"
/// defaults to ["dsm"]. Errors name the offending field, and JSON syntax
/// errors carry line and column.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

}  // namespace dsmfuse::cli
