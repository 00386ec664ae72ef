#pragma once

#include <stdexcept>
#include <string>

namespace dsmfuse {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad indices, unknown names, invalid weights.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Two values built over different frames (or models) were mixed.
class FrameMismatch : public InputError {
 public:
  using InputError::InputError;
};

/// A rule or observation demands support for a proposition that is empty
/// under the model.
class Contradiction : public InputError {
 public:
  using InputError::InputError;
};

/// A configured size limit was exceeded (hyper-power set enumeration).
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Dempster normalization is impossible: the conjunctive conflict is total.
class TotalConflict : public Error {
 public:
  explicit TotalConflict(double conflict_mass)
      : Error("total conflict: conflicting mass " + std::to_string(conflict_mass) +
              " leaves nothing to normalize"),
        conflict_mass_(conflict_mass) {}

  [[nodiscard]] double conflict_mass() const noexcept { return conflict_mass_; }

 private:
  double conflict_mass_;
};

}  // namespace dsmfuse
