#pragma once

// Refinement of D^Θ propositions onto an exclusive and exhaustive atom frame
// (the Shafer frame built as the product of binary or n-ary attribute axes).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dsmfuse/lattice.hpp"

namespace dsmfuse {

/// Bitmask over atom indices.
using AtomSet = std::uint64_t;

struct AxisValue {
  std::size_t axis = 0;
  std::size_t value = 0;

  friend auto operator<=>(const AxisValue&, const AxisValue&) = default;
};

/// Product of mutually exclusive, exhaustive axes. Atoms are all value
/// tuples; the first axis varies slowest, so with axes (f|f̄, b|b̄, p|p̄)
/// atom 0 is f∩b∩p and atom 4 is f̄∩b∩p.
class AtomFrame {
 public:
  explicit AtomFrame(std::vector<std::vector<std::string>> axes);

  [[nodiscard]] const std::vector<std::vector<std::string>>& axes() const noexcept { return axes_; }
  [[nodiscard]] std::size_t atom_count() const noexcept { return atom_count_; }
  [[nodiscard]] std::vector<std::size_t> atom_values(std::size_t atom) const;
  [[nodiscard]] std::string atom_name(std::size_t atom) const;

  /// The atoms as a frame of singletons, and its Shafer model.
  [[nodiscard]] const Frame& frame() const noexcept { return frame_; }
  [[nodiscard]] Model shafer_model() const { return Model::shafer(frame_); }

  [[nodiscard]] AtomSet all_atoms() const noexcept;

  friend bool operator==(const AtomFrame& a, const AtomFrame& b) { return a.axes_ == b.axes_; }

 private:
  std::vector<std::vector<std::string>> axes_;
  std::size_t atom_count_ = 1;
  Frame frame_;
};

/// Assigns each frame singleton the axis value it stands for. Distinct
/// singletons must name distinct values.
class LiteralMap {
 public:
  LiteralMap() = default;
  LiteralMap(std::size_t frame_width, const AtomFrame& atoms,
             std::span<const std::pair<std::size_t, AxisValue>> entries);

  [[nodiscard]] std::optional<AxisValue> lookup(std::size_t singleton) const;
  [[nodiscard]] std::size_t frame_width() const noexcept { return values_.size(); }
  [[nodiscard]] const std::vector<std::optional<AxisValue>>& entries() const noexcept { return values_; }

 private:
  std::vector<std::optional<AxisValue>> values_;
};

/// Atoms consistent with at least one term of `a`. A term fixes the axes of
/// its singletons and leaves the rest free; two different values on one axis
/// make the term contribute nothing. Throws InputError on an unmapped
/// singleton.
[[nodiscard]] AtomSet refine_to_atoms(const Proposition& a, const AtomFrame& atoms, const LiteralMap& literals);

/// Union of the atoms in `set`, as a proposition on atoms.frame().
[[nodiscard]] Proposition atoms_to_proposition(AtomSet set, const AtomFrame& atoms);

}  // namespace dsmfuse
