#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffprog {

enum class Errc {
  NotPrime,
  OutOfRange,
  DivisionByZero,
  BadCharacteristic,
  Inadmissible,
  BadDensity,
  CharTooSmall,
  EmptyVariety,
  NotMeanZero,
  DegreeTooSmall,
  WorkBudgetExceeded,
  ZeroPolynomial,
  BadDegrees,
  Mismatch,
  Parse,
  Io,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library surfaces as this exception; the code is what
// callers (and the CLI's exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ffprog
