#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

/// Malformed or inadmissible input. The CLI maps this to exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parse failure; carries the byte offset of the offending token.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidArgument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// f has vanishing x-derivative: square-free possibly, but not separable.
class Inseparable : public InvalidArgument {
 public:
  Inseparable() : InvalidArgument("inseparable: df/dx vanishes identically") {}
};

/// A scan would exceed the configured work budget. Exit code 3.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken; indicates a bug rather than bad input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sqf
