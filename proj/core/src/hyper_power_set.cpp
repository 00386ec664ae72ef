#include "dsmfuse/hyper_power_set.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>

#include "dsmfuse/error.hpp"

namespace dsmfuse {

namespace {

// An element of D^Θ is an up-set of nonempty subsets of Θ (the regions it
// covers in the free Venn diagram), stored as a bitmask over the 2^n subsets:
// bit s is set when subset s belongs to the up-set. Up-sets over n variables
// split into pairs (lower, upper) over n-1 variables with lower ⊆ upper,
// which gives the Dedekind recursion directly.
std::vector<std::uint64_t> monotone_families(std::size_t n) {
  std::vector<std::uint64_t> families{0b0, 0b1};
  for (std::size_t k = 1; k <= n; ++k) {
    const unsigned shift = 1U << (k - 1);
    std::vector<std::uint64_t> next;
    next.reserve(families.size() * 4);
    for (std::uint64_t lower : families) {
      for (std::uint64_t upper : families) {
        if ((lower & ~upper) == 0) next.push_back(lower | (upper << shift));
      }
    }
    families = std::move(next);
  }
  return families;
}

Proposition family_to_proposition(std::size_t n, std::uint64_t family) {
  std::vector<IndexSet> terms;
  for (std::uint64_t rest = family; rest != 0; rest &= rest - 1) {
    const auto s = static_cast<IndexSet>(std::countr_zero(rest));
    bool minimal = true;
    for (IndexSet bits = s; bits != 0 && minimal; bits &= bits - 1) {
      const IndexSet below = s & ~(bits & (~bits + 1));
      if (below != 0 && (family >> below) & 1U) minimal = false;
    }
    if (minimal) terms.push_back(s);
  }
  return Proposition::canonicalize(n, terms);
}

void check_limit(std::size_t n, const EnumerationOptions& options) {
  if (n == 0) throw InputError("hyper-power set needs a nonempty frame");
  if (n > kHardEnumerationLimit) {
    throw LimitExceeded("refusing to enumerate D^Θ for n = " + std::to_string(n) + " (" +
                        (n <= 7 ? std::to_string(hyper_power_set_size(n)) : std::string("too many")) +
                        " elements); the hard limit is n = " + std::to_string(kHardEnumerationLimit));
  }
  if (n > options.default_limit && !options.allow_large) {
    throw LimitExceeded("enumerating D^Θ for n = " + std::to_string(n) + " yields " +
                        std::to_string(hyper_power_set_size(n)) +
                        " elements; pass the large-enumeration override to proceed");
  }
}

}  // namespace

std::uint64_t hyper_power_set_size(std::size_t n) {
  static constexpr std::array<std::uint64_t, 8> kSizes{1, 2, 5, 19, 167, 7580, 7828353, 2414682040997ULL};
  if (n >= kSizes.size()) throw LimitExceeded("|D^Θ| overflows 64 bits for n = " + std::to_string(n));
  return kSizes[n];
}

void for_each_hyper_power_set_element(std::size_t n, const EnumerationOptions& options,
                                      const std::function<void(const Proposition&)>& visit) {
  check_limit(n, options);
  auto families = monotone_families(n);
  // Bit 0 is the empty subset; the only up-set holding it is the whole cube,
  // which is not an element of D^Θ.
  std::erase_if(families, [](std::uint64_t f) { return (f & 1U) != 0; });
  std::sort(families.begin(), families.end(), [](std::uint64_t a, std::uint64_t b) {
    const int ca = std::popcount(a);
    const int cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  for (std::uint64_t family : families) visit(family_to_proposition(n, family));
}

std::vector<Proposition> enumerate_hyper_power_set(const Frame& frame, const EnumerationOptions& options) {
  std::vector<Proposition> out;
  check_limit(frame.size(), options);
  out.reserve(hyper_power_set_size(frame.size()));
  for_each_hyper_power_set_element(frame.size(), options,
                                   [&out](const Proposition& p) { out.push_back(p); });
  return out;
}

}  // namespace dsmfuse
