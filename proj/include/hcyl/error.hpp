#pragma once

#include <stdexcept>
#include <string>

namespace hcyl {

enum class ErrorCode {
  ZeroPolynomial,
  NotUnitAtOne,
  PoleAtZero,
  NotPrime,
  NotOneModFour,
  UnsupportedStabilized,
  AlreadyStabilized,
  SearchExhausted,
  InvalidArgument,
  Parse,
  Overflow,
};

const char* to_string(ErrorCode code) noexcept;

// All recoverable failures in the core library are reported with this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcyl
