#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nichols {

// A documented precondition of an operation does not hold for its input
// (wrong shape, even-order entries where odd order is required, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A search interval admits several solutions where a unique one was asked for.
class AmbiguityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation would exceed one of the configured size limits.
class ResourceGuardError : public std::runtime_error {
 public:
  ResourceGuardError(const std::string& what, std::size_t requested, std::size_t limit)
      : std::runtime_error(what), requested_(requested), limit_(limit) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t requested_;
  std::size_t limit_;
};

// Two independent computations that must agree did not. Always a bug.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nichols
