#include "dsmfuse/rulebase.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

constexpr std::string_view kInconsistent = "inconsistent (total conflict)";

void require_on_model(const Proposition& p, const Model& model, const char* what) {
  if (p.width() != model.width()) throw FrameMismatch(std::string(what) + " is not on the model's frame");
}

std::string observation_stage(std::size_t i) { return "observation " + std::to_string(i + 1); }

IndexSet used_singletons(const Scenario& s) {
  IndexSet used = 0;
  for (const auto& r : s.rules) used |= r.antecedent.support() | r.consequent.support();
  for (const auto& o : s.observations) used |= o.support();
  for (const auto& q : s.queries) used |= q.support();
  return used;
}

void evaluate_queries(EngineReport& report, const Scenario& scenario, const Bba& fused,
                      const std::vector<Proposition>& engine_queries) {
  for (std::size_t i = 0; i < scenario.queries.size(); ++i) {
    report.queries.push_back(
        {scenario.queries[i], Interval{belief(fused, engine_queries[i]), plausibility(fused, engine_queries[i])}});
  }
}

// Fuses the rule BBAs jointly (k sources at once), then each observation in
// turn. `combine` is the engine's rule of combination. A stage that throws
// TotalConflict is still recorded before the exception propagates.
template <class Combine>
void fuse_pipeline(EngineReport& report, const Model& model, const std::vector<Bba>& rules,
                   const std::vector<Bba>& observations, Combine&& combine) {
  auto stage = [&](std::string name, std::span<const Bba> sources) {
    try {
      auto fused = combine(sources);
      report.stages.push_back({std::move(name), fused.conflict_mass, fused.normalization_constant});
      return std::move(fused.result);
    } catch (const TotalConflict& conflict) {
      report.stages.push_back({std::move(name), conflict.conflict_mass(), 0.0});
      throw;
    }
  };
  std::optional<Bba> current;
  if (rules.empty()) {
    current = Bba::vacuous(model);
  } else if (rules.size() == 1) {
    current = rules.front();
  } else {
    current = stage("rules", rules);
  }
  report.prior = current;
  for (std::size_t i = 0; i < observations.size(); ++i) {
    const std::array<Bba, 2> pair{*current, observations[i]};
    current = stage(observation_stage(i), pair);
  }
  report.fused = current;
}

EngineReport run_dsm(const Scenario& s) {
  EngineReport report;
  report.engine = Engine::dsm;
  report.model = s.model;
  std::vector<Bba> rules;
  for (const auto& r : s.rules) rules.push_back(rule_to_conditional_bba(r, s.model));
  std::vector<Bba> observations;
  for (const auto& o : s.observations) observations.push_back(observation_to_bba(o, s.model));
  fuse_pipeline(report, s.model, rules, observations,
                [](std::span<const Bba> sources) { return dsm_hybrid_combine(sources); });
  evaluate_queries(report, s, *report.fused, s.queries);
  return report;
}

EngineReport run_dst(const Scenario& s) {
  if (!s.dst_axes) throw InputError("the dst engine needs dst_axes describing the refined frame");
  const AtomFrame& atoms = s.dst_axes->atoms;
  const LiteralMap& literals = s.dst_axes->literals;
  const Model model = atoms.shafer_model();
  auto refine = [&](const Proposition& p) { return atoms_to_proposition(refine_to_atoms(p, atoms, literals), atoms); };

  EngineReport report;
  report.engine = Engine::dst;
  report.model = model;
  std::vector<Bba> rules;
  for (const auto& r : s.rules) {
    rules.push_back(rule_to_conditional_bba({refine(r.antecedent), refine(r.consequent), r.weight}, model));
  }
  std::vector<Bba> observations;
  for (const auto& o : s.observations) observations.push_back(observation_to_bba(refine(o), model));
  std::vector<Proposition> queries;
  for (const auto& q : s.queries) queries.push_back(refine(q));

  try {
    fuse_pipeline(report, model, rules, observations,
                  [](std::span<const Bba> sources) { return dempster_combine(sources); });
  } catch (const TotalConflict&) {
    report.status = EngineStatus::inconsistent;
    report.message = std::string(kInconsistent) + " at stage '" + report.stages.back().stage + "'";
    report.fused.reset();
    return report;
  }
  evaluate_queries(report, s, *report.fused, queries);
  return report;
}

// The probabilistic reading only exists for the triangle a→x, b→y, a→b with
// x, y exclusive and the single observation a∩b.
struct Triangle {
  double eps1;  // 1 - w(a → x)
  double eps2;  // 1 - w(b → y)
  double eps3;  // 1 - w(a → b)
  Proposition x;
  Proposition y;
};

std::optional<std::size_t> lone_singleton(const Proposition& p) {
  if (p.terms().size() != 1 || cardinality(p.terms()[0]) != 1) return std::nullopt;
  return static_cast<std::size_t>(std::countr_zero(p.terms()[0]));
}

std::optional<Triangle> match_triangle(const Scenario& s) {
  if (s.rules.size() != 3 || s.observations.size() != 1) return std::nullopt;
  std::array<std::size_t, 3> order{0, 1, 2};
  do {
    const auto& to_x = s.rules[order[0]];
    const auto& to_y = s.rules[order[1]];
    const auto& a_to_b = s.rules[order[2]];
    const auto a = lone_singleton(a_to_b.antecedent);
    const auto b = lone_singleton(a_to_b.consequent);
    const auto x = lone_singleton(to_x.consequent);
    const auto y = lone_singleton(to_y.consequent);
    if (!a || !b || !x || !y || *a == *b || *x == *y) continue;
    if (lone_singleton(to_x.antecedent) != a || lone_singleton(to_y.antecedent) != b) continue;
    if (!s.model.term_is_empty((IndexSet{1} << *x) | (IndexSet{1} << *y))) continue;
    const Proposition observed = Proposition::intersection(s.model.width(), (IndexSet{1} << *a) | (IndexSet{1} << *b));
    if (!(s.model.reduce(s.observations.front()) == observed)) continue;
    return Triangle{1.0 - to_x.weight, 1.0 - to_y.weight, 1.0 - a_to_b.weight, to_x.consequent, to_y.consequent};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

EngineReport run_bayes(const Scenario& s) {
  EngineReport report;
  report.engine = Engine::bayes;
  const auto triangle = match_triangle(s);
  if (!triangle) {
    report.status = EngineStatus::not_applicable;
    report.message = "not applicable: the probabilistic reading needs rules a->x, b->y, a->b with x, y exclusive "
                     "and the single observation a&b";
    return report;
  }
  if (triangle->eps3 == 1.0) {
    report.status = EngineStatus::not_applicable;
    report.message = "not applicable: the rule a->b has weight 0, so P(b|a) vanishes";
    return report;
  }
  report.bayes = indifference_estimates(triangle->eps1, triangle->eps2, triangle->eps3);
  const auto& est = *report.bayes;
  for (const auto& q : s.queries) {
    const Proposition reduced = s.model.reduce(q);
    std::optional<double> point;
    if (reduced == triangle->y) point = est.p_fly;
    if (reduced == triangle->x) point = est.p_not_fly;
    if (!point) {
      report.warnings.push_back("no probabilistic estimate for a query other than the two exclusive outcomes");
      continue;
    }
    if (*point < 0.0 || *point > 1.0) {
      report.warnings.push_back("estimate outside [0, 1] omitted from the query table");
      continue;
    }
    report.queries.push_back({q, Interval{*point, *point}});
  }
  return report;
}

}  // namespace

Bba rule_to_conditional_bba(const WeightedRule& rule, const Model& model) {
  require_on_model(rule.antecedent, model, "rule antecedent");
  require_on_model(rule.consequent, model, "rule consequent");
  if (!std::isfinite(rule.weight) || rule.weight < 0.0 || rule.weight > 1.0) {
    throw InputError("rule weight " + std::to_string(rule.weight) + " is outside [0, 1]");
  }
  if (model.is_empty(rule.antecedent)) throw Contradiction("rule antecedent is empty under the model");
  const Proposition both = model.reduce(conjoin(rule.antecedent, rule.consequent));
  if (both.is_empty() && rule.weight > 0.0) {
    throw Contradiction("rule with positive weight whose antecedent and consequent cannot hold together");
  }
  std::vector<Bba::Entry> masses;
  if (rule.weight > 0.0) masses.emplace_back(both, rule.weight);
  if (rule.weight < 1.0) masses.emplace_back(rule.antecedent, 1.0 - rule.weight);
  return Bba(model, masses);
}

Bba observation_to_bba(const Proposition& observation, const Model& model) {
  require_on_model(observation, model, "observation");
  if (model.is_empty(observation)) throw Contradiction("observation is empty under the model");
  return Bba::categorical(model, observation);
}

std::string_view to_string(Engine engine) noexcept {
  switch (engine) {
    case Engine::bayes: return "bayes";
    case Engine::dst: return "dst";
    case Engine::dsm: return "dsm";
  }
  return "?";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept {
  if (name == "bayes") return Engine::bayes;
  if (name == "dst") return Engine::dst;
  if (name == "dsm") return Engine::dsm;
  return std::nullopt;
}

std::string_view to_string(EngineStatus status) noexcept {
  switch (status) {
    case EngineStatus::ok: return "ok";
    case EngineStatus::inconsistent: return "inconsistent";
    case EngineStatus::not_applicable: return "not applicable";
  }
  return "?";
}

void Scenario::validate() const {
  const std::size_t n = model.width();
  if (queries.empty()) throw InputError("scenario needs at least one query");
  if (engines.empty()) throw InputError("scenario selects no engine");
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const auto& r = rules[i];
    const std::string where = "rules[" + std::to_string(i) + "]";
    if (r.antecedent.width() != n || r.consequent.width() != n) throw FrameMismatch(where + " is not on the frame");
    if (r.antecedent.is_empty()) throw InputError(where + ": antecedent must not be empty");
    if (!std::isfinite(r.weight) || r.weight < 0.0 || r.weight > 1.0) {
      throw InputError(where + ": weight " + std::to_string(r.weight) + " is outside [0, 1]");
    }
  }
  for (const auto& o : observations) {
    if (o.width() != n) throw FrameMismatch("observation is not on the frame");
  }
  for (const auto& q : queries) {
    if (q.width() != n) throw FrameMismatch("query is not on the frame");
  }
  const bool wants_dst = std::find(engines.begin(), engines.end(), Engine::dst) != engines.end();
  if (dst_axes && dst_axes->literals.frame_width() != n) {
    throw FrameMismatch("dst_axes literal map is not on the frame");
  }
  if (wants_dst) {
    if (!dst_axes) throw InputError("the dst engine needs dst_axes describing the refined frame");
    const IndexSet used = used_singletons(*this);
    for (std::size_t i = 0; i < n; ++i) {
      if (((used >> i) & 1U) && !dst_axes->literals.lookup(i)) {
        throw InputError("singleton '" + frame().name(i) + "' is used but has no axis value in dst_axes");
      }
    }
  }
}

bool FusionReport::inconsistent() const noexcept {
  return std::any_of(engines.begin(), engines.end(),
                     [](const EngineReport& e) { return e.status == EngineStatus::inconsistent; });
}

EngineReport run_engine(const Scenario& scenario, Engine engine) {
  switch (engine) {
    case Engine::dsm: return run_dsm(scenario);
    case Engine::dst: return run_dst(scenario);
    case Engine::bayes: return run_bayes(scenario);
  }
  throw InputError("unknown engine");
}

FusionReport run_scenario(const Scenario& scenario) {
  scenario.validate();
  FusionReport report{scenario.frame(), {}};
  for (Engine engine : scenario.engines) report.engines.push_back(run_engine(scenario, engine));
  return report;
}

}  // namespace dsmfuse
