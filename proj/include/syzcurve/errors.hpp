#pragma once

#include <stdexcept>
#include <string>

namespace syzcurve {

/// Bad user input: syntax errors, malformed files, out-of-range arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computed quantity contradicts a theorem the pipeline relies on. This
/// always points at an arithmetic bug (or an unlucky prime), never at the input.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A rational coefficient whose denominator vanishes modulo the working prime.
class UnluckyPrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace syzcurve
