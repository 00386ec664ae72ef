#pragma once

// Propositions of the hyper-power set D^Θ (the free distributive lattice
// generated by the frame singletons under ∪ and ∩) and the integrity
// constraints that turn the free model into a hybrid or Shafer model.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsmfuse {

/// Bitmask over singleton indices. Bit i set means θ_i takes part in the
/// intersection, so {0, 2} denotes θ₁ ∩ θ₃.
using IndexSet = std::uint64_t;

inline constexpr std::size_t kMaxFrameSize = 64;

[[nodiscard]] constexpr bool is_subset(IndexSet a, IndexSet b) noexcept { return (a & ~b) == 0; }

[[nodiscard]] constexpr int cardinality(IndexSet s) noexcept { return std::popcount(s); }

/// Canonical term order: by size, then lexicographically over the sorted
/// index lists.
[[nodiscard]] constexpr bool term_less(IndexSet a, IndexSet b) noexcept {
  if (a == b) return false;
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Equal sizes: the smallest index in the symmetric difference decides.
  const IndexSet diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

/// Ordered list of distinct singleton names. Index order is the canonical
/// order used everywhere downstream.
class Frame {
 public:
  explicit Frame(std::vector<std::string> singletons);

  /// Frame named t1..tn.
  static Frame numbered(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::string& name(std::size_t index) const { return names_.at(index); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError naming the unknown singleton.
  [[nodiscard]] std::size_t index_of(std::string_view name) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> names_;
};

/// Element of D^Θ in absorption-normal form: an antichain of intersection
/// terms whose union is the proposition. The empty antichain is ∅.
///
/// Two propositions equal in the free distributive lattice have identical
/// stored forms, so == is lattice equality.
class Proposition {
 public:
  Proposition() = default;

  static Proposition empty(std::size_t width);
  static Proposition singleton(std::size_t width, std::size_t index);
  /// Intersection of the singletons in `term`.
  static Proposition intersection(std::size_t width, IndexSet term);
  /// Absorbs, deduplicates and orders `terms`. Throws InputError on an
  /// empty term or an index outside the frame.
  static Proposition canonicalize(std::size_t width, std::span<const IndexSet> terms);

  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] std::span<const IndexSet> terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_empty() const noexcept { return terms_.empty(); }
  /// Union of every singleton index appearing in some term.
  [[nodiscard]] IndexSet support() const noexcept;

  friend bool operator==(const Proposition&, const Proposition&) = default;
  friend std::strong_ordering operator<=>(const Proposition& a, const Proposition& b);

 private:
  Proposition(std::size_t width, std::vector<IndexSet> terms)
      : width_(static_cast<std::uint32_t>(width)), terms_(std::move(terms)) {}

  friend class Model;

  std::uint32_t width_ = 0;
  std::vector<IndexSet> terms_;
};

[[nodiscard]] Proposition conjoin(const Proposition& a, const Proposition& b);
[[nodiscard]] Proposition disjoin(const Proposition& a, const Proposition& b);

/// u(X): union of all singletons composing X; u(∅) = ∅.
[[nodiscard]] Proposition u_of(const Proposition& a);

/// θ₁ ∪ … ∪ θₙ.
[[nodiscard]] Proposition total_ignorance(std::size_t width);

enum class ModelKind { free, hybrid, shafer };

[[nodiscard]] std::string_view to_string(ModelKind kind) noexcept;

/// Integrity constraints over a frame. Each constraint is a set of at least
/// two singletons whose joint intersection is declared empty.
///
/// Constraints are kept minimal (a constraint containing another one is
/// redundant) and sorted, so two models with the same empty elements compare
/// equal. The kind is derived: no constraints is free, every distinct pair
/// declared is Shafer, anything else is hybrid.
class Model {
 public:
  explicit Model(Frame frame, std::span<const IndexSet> empty_intersections = {});

  static Model free(Frame frame);
  static Model shafer(Frame frame);

  [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
  [[nodiscard]] std::size_t width() const noexcept { return frame_.size(); }
  [[nodiscard]] ModelKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::span<const IndexSet> constraints() const noexcept { return constraints_; }

  /// True when the intersection term is forced empty by some constraint.
  [[nodiscard]] bool term_is_empty(IndexSet term) const noexcept;
  [[nodiscard]] Proposition reduce(const Proposition& a) const;
  [[nodiscard]] bool is_empty(const Proposition& a) const;

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Frame frame_;
  std::vector<IndexSet> constraints_;
  ModelKind kind_ = ModelKind::free;
};

/// Drops every term containing a declared empty intersection. The result is
/// the canonical representative of `a` in the constrained lattice.
[[nodiscard]] Proposition reduce_under_model(const Proposition& a, const Model& model);

/// Lattice order under the model: reduce(a ∧ b) = reduce(a).
[[nodiscard]] bool leq(const Proposition& a, const Proposition& b, const Model& model);

}  // namespace dsmfuse
