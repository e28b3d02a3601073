#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gopkit {

/// A precondition on a value was violated (out-of-range element, invalid gop, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An exhaustive computation was refused because it exceeds the compute guard.
/// The message names the flag that lifts the guard.
class GuardError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text literal. `position()` is the 0-based offset of the offending character.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gopkit
