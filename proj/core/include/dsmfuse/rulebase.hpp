#pragma once

// Weighted if-then rules, observations, and the per-engine fusion pipeline.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dsmfuse/analysis.hpp"
#include "dsmfuse/atom_frame.hpp"
#include "dsmfuse/belief.hpp"
#include "dsmfuse/lattice.hpp"

namespace dsmfuse {

/// antecedent → consequent held with conviction `weight` (w = 1 - ε).
struct WeightedRule {
  Proposition antecedent;
  Proposition consequent;
  double weight = 1.0;
};

/// Least-committed BBA with Bel(consequent | antecedent) = weight:
/// m(antecedent ∧ consequent) = weight, m(antecedent) = 1 - weight.
/// Throws Contradiction when weight > 0 and the conjunction is empty under
/// the model, InputError on an empty antecedent or a weight outside [0,1].
[[nodiscard]] Bba rule_to_conditional_bba(const WeightedRule& rule, const Model& model);

/// m(observation) = 1. Throws Contradiction if the observation is empty
/// under the model.
[[nodiscard]] Bba observation_to_bba(const Proposition& observation, const Model& model);

enum class Engine { bayes, dst, dsm };

[[nodiscard]] std::string_view to_string(Engine engine) noexcept;
[[nodiscard]] std::optional<Engine> parse_engine(std::string_view name) noexcept;

/// Refined Shafer frame for the Dempster-Shafer engine.
struct DstAxes {
  AtomFrame atoms;
  LiteralMap literals;
};

struct Scenario {
  Model model;
  std::vector<WeightedRule> rules;
  std::vector<Proposition> observations;
  std::vector<Proposition> queries;
  std::vector<Engine> engines;
  std::optional<DstAxes> dst_axes;

  [[nodiscard]] const Frame& frame() const noexcept { return model.frame(); }
  /// Throws InputError when an invariant does not hold.
  void validate() const;
};

struct Interval {
  double bel = 0.0;
  double pl = 0.0;
};

struct QueryResult {
  Proposition query;
  Interval interval;
};

struct StageDiagnostics {
  std::string stage;
  double conflict_mass = 0.0;
  std::optional<double> normalization_constant;
};

enum class EngineStatus { ok, inconsistent, not_applicable };

[[nodiscard]] std::string_view to_string(EngineStatus status) noexcept;

struct EngineReport {
  Engine engine = Engine::dsm;
  EngineStatus status = EngineStatus::ok;
  std::string message;
  /// Model the BBAs live on: the scenario model for dsm, the refined atom
  /// frame for dst.
  std::optional<Model> model;
  /// Fused rules before any observation.
  std::optional<Bba> prior;
  /// Fused rules and observations.
  std::optional<Bba> fused;
  std::vector<StageDiagnostics> stages;
  /// Queries are expressed on the scenario frame.
  std::vector<QueryResult> queries;
  std::optional<BayesEstimates> bayes;
  std::vector<std::string> warnings;
};

struct FusionReport {
  Frame frame;
  std::vector<EngineReport> engines;

  [[nodiscard]] bool inconsistent() const noexcept;
};

/// Runs one engine. Total conflict is reported through the status, not thrown.
[[nodiscard]] EngineReport run_engine(const Scenario& scenario, Engine engine);

/// Validates the scenario and runs every engine it selects, in order.
[[nodiscard]] FusionReport run_scenario(const Scenario& scenario);

}  // namespace dsmfuse
