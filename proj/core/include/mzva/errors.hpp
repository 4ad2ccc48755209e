#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzva {

// Malformed input: bad flavor index, nonpositive mode, invalid algebra table.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A declared weight, degree or exponent-window bound was exceeded.
class BoundOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::invalid_argument("at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mzva
