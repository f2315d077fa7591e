#pragma once

#include <stdexcept>
#include <string>

namespace liegeo {

/// Bad input: dimension mismatch, violated precondition, malformed data.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematically guaranteed result failed to hold. Always a bug.
class InternalInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A checked mathematical property was violated on concrete data
/// (e.g. a dimension bound audit). Carries a serialized witness.
class PropertyViolation : public std::runtime_error {
 public:
  PropertyViolation(const std::string& what, std::string witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace liegeo
