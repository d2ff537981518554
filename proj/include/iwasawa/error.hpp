#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iwasawa {

/// Arithmetic precondition violated (division by zero, mismatched prime, ...).
class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group data rejected at construction: bad table, non l-power order, ...
class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncated-series operation needs more T-precision than it was given.
class PrecisionError : public std::runtime_error {
 public:
  PrecisionError(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_(required) {}
  std::int64_t required_precision() const noexcept { return required_; }

 private:
  std::int64_t required_;
};

/// An internal invariant failed. Never expected for valid input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace iwasawa
