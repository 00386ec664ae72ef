#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dsmfuse/lattice.hpp"

namespace dsmfuse {

struct EnumerationOptions {
  /// Frames above this size are refused unless allow_large is set.
  std::size_t default_limit = 5;
  /// Permits n = 6 (7,828,353 elements). Nothing above 6 is ever enumerated.
  bool allow_large = false;
};

inline constexpr std::size_t kHardEnumerationLimit = 6;

/// |D^Θ| for a frame of n singletons, ∅ included (Dedekind number minus one).
/// Known for n ≤ 7.
[[nodiscard]] std::uint64_t hyper_power_set_size(std::size_t n);

/// Streams every element of D^Θ in the canonical enumeration order: by the
/// number of free-lattice regions the element covers, ties broken by its
/// region bitmask. ∅ comes first and total ignorance last. Throws
/// LimitExceeded when n is above the configured limit.
void for_each_hyper_power_set_element(std::size_t n, const EnumerationOptions& options,
                                      const std::function<void(const Proposition&)>& visit);

/// Materialized form of for_each_hyper_power_set_element.
[[nodiscard]] std::vector<Proposition> enumerate_hyper_power_set(const Frame& frame,
                                                                 const EnumerationOptions& options = {});

}  // namespace dsmfuse
