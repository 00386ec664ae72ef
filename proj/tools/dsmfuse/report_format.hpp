#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dsmfuse/rulebase.hpp"

namespace dsmfuse::cli {

enum class OutputFormat { table, json, csv };

[[nodiscard]] std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

/// Ten significant digits, shortest form ("0.09", "1", "0.9090081893").
[[nodiscard]] std::string format_number(double value);

/// Infix text: "f", "p&b", "(p&nf) | (b&f)"; ∅ is "{}".
[[nodiscard]] std::string format_proposition(const Proposition& p, const Frame& frame);

/// Deterministic rendering of a report. The json form carries full
/// precision and reads back with parse_report.
[[nodiscard]] std::string emit_report(const FusionReport& report, OutputFormat format);

/// One row per query with an interval column per engine, followed by the
/// probabilistic estimates when the bayes engine produced any.
[[nodiscard]] std::string emit_comparison(const FusionReport& report);

[[nodiscard]] FusionReport parse_report(std::string_view json);

}  // namespace dsmfuse::cli
