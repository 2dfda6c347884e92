#include "ocagen/error.h"

namespace ocagen {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::parse: return "parse error";
    case Errc::division_by_zero: return "division by zero";
    case Errc::undefined_gcd: return "undefined gcd";
    case Errc::invalid_sequence: return "invalid quotient sequence";
    case Errc::precondition: return "precondition violated";
    case Errc::invalid_arguments: return "invalid arguments";
    case Errc::invalid_polynomial: return "invalid polynomial";
    case Errc::unsupported_rule: return "unsupported rule";
    case Errc::invalid_length: return "invalid length";
    case Errc::not_a_latin_square: return "not a latin square";
    case Errc::oracle_guard: return "oracle size guard";
  }
  return "unknown error";
}

}  // namespace ocagen
