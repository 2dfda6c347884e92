#pragma once

#include <stdexcept>
#include <string>

namespace ocagen {

enum class Errc {
  parse,
  division_by_zero,
  undefined_gcd,
  invalid_sequence,
  precondition,
  invalid_arguments,
  invalid_polynomial,
  unsupported_rule,
  invalid_length,
  not_a_latin_square,
  oracle_guard,
};

const char* to_string(Errc code) noexcept;

// Base class for every domain failure raised by the library. The CLI maps
// these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(Errc::parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ocagen
