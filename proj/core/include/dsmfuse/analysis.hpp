#pragma once

// Probabilistic readings of weighted rules. These are kept to show where the
// probabilistic model breaks, so out-of-range values are flagged, never clamped.

#include <string>
#include <vector>

namespace dsmfuse {

struct BayesEstimates {
  /// P̂(f | p∩b) under indifference and conditional independence.
  double p_fly = 0.0;
  /// P̂(f̄ | p∩b) under the same assumptions.
  double p_not_fly = 0.0;
  /// 1 - (p_fly + p_not_fly); zero for a genuine probability.
  double additivity_deficit = 0.0;
  /// Upper bound ε₁ / (1 - ε₃) on P(f | p∩b).
  double bound = 0.0;
  std::vector<std::string> validity_flags;
};

/// ε₁ / (1 - ε₃). Requires ε₁ ∈ [0,1], ε₃ ∈ [0,1).
[[nodiscard]] double pearl_flying_bound(double eps1, double eps3);

/// Estimates ε₁(1-ε₂)/(1-ε₃) and (1-ε₁)ε₂/(1-ε₃) with their additivity
/// deficit. Requires every ε in [0,1] and ε₃ < 1.
[[nodiscard]] BayesEstimates indifference_estimates(double eps1, double eps2, double eps3);

struct ModusTollensPosteriors {
  /// P(ā | b̄) = 1 - (1-w)·P(a)/(1-P(b))
  double not_a_given_not_b = 0.0;
  /// P(ā | b) = 1 - w·P(a)/P(b)
  double not_a_given_b = 0.0;
  std::vector<std::string> flags;

  [[nodiscard]] bool valid() const noexcept { return flags.empty(); }
};

/// Posteriors of the contrapositives of a rule a → b weighted w = P(b|a),
/// given priors P(a) and P(b) ∈ (0,1).
[[nodiscard]] ModusTollensPosteriors modus_tollens_posteriors(double w, double pa, double pb);

}  // namespace dsmfuse
