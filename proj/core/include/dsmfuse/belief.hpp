#pragma once

// Basic belief assignments, Bel/Pl, and the three combination rules.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dsmfuse/lattice.hpp"

namespace dsmfuse {

/// Basic belief assignment over the (possibly constrained) lattice of a model.
///
/// Keys are canonical and model-reduced, so propositions equal under the
/// constraints share one entry. Only focal elements (mass > 0) are stored,
/// in canonical proposition order.
class Bba {
 public:
  using Entry = std::pair<Proposition, double>;

  /// Normalized assignment. Duplicate keys (after reduction) are merged.
  /// Throws InputError on negative or non-finite masses, mass on a
  /// model-empty proposition, or a total differing from 1 by more than 1e-12.
  Bba(Model model, std::span<const Entry> masses);

  /// Like the constructor but keeps mass on ∅. Conjunctive combination is
  /// the producer of such assignments.
  static Bba with_conflict(Model model, std::span<const Entry> masses);

  /// All mass on total ignorance.
  static Bba vacuous(Model model);
  /// All mass on one proposition.
  static Bba categorical(Model model, const Proposition& focal);

  [[nodiscard]] const Model& model() const noexcept { return model_; }
  [[nodiscard]] const Frame& frame() const noexcept { return model_.frame(); }
  [[nodiscard]] std::span<const Entry> focal_elements() const noexcept { return focal_; }
  [[nodiscard]] std::size_t size() const noexcept { return focal_.size(); }

  /// Mass keyed at reduce(a); zero when a is not focal.
  [[nodiscard]] double mass(const Proposition& a) const;
  [[nodiscard]] double empty_mass() const;
  [[nodiscard]] double total_mass() const;

 private:
  Bba(Model model, std::span<const Entry> masses, bool allow_empty);

  Model model_;
  std::vector<Entry> focal_;
};

struct CombinationReport {
  Bba result;
  /// Mass the conjunctive core assigned to ∅, before normalization or transfer.
  double conflict_mass = 0.0;
  /// K = 1 - conflict_mass, reported by Dempster's rule only.
  std::optional<double> normalization_constant;
};

/// Σ m(x) over focal x with x ≤ a under the model.
[[nodiscard]] double belief(const Bba& bba, const Proposition& a);
/// Σ m(x) over focal x with reduce(x ∧ a) ≠ ∅.
[[nodiscard]] double plausibility(const Bba& bba, const Proposition& a);

/// Unnormalized conjunctive rule; on a free model this is the classic DSm
/// rule. Conflict stays keyed at ∅.
[[nodiscard]] CombinationReport conjunctive_combine(std::span<const Bba> sources);

/// Conjunctive rule renormalized by K. Throws TotalConflict when K ≤ 1e-12.
[[nodiscard]] CombinationReport dempster_combine(std::span<const Bba> sources);

/// Hybrid DSm rule. Each focal tuple is routed once: a nonempty intersection
/// keeps its mass; a tuple of empty focals moves to u(X₁)∪…∪u(X_k) (or to
/// total ignorance when that is empty too); any other empty intersection
/// moves to the union X₁∪…∪X_k (total ignorance if empty). Mass is
/// conserved and never keyed at a model-empty proposition.
[[nodiscard]] CombinationReport dsm_hybrid_combine(std::span<const Bba> sources);

inline constexpr double kTotalConflictThreshold = 1e-12;
inline constexpr double kMassTolerance = 1e-12;

}  // namespace dsmfuse
