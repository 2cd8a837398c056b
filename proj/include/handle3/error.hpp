#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace handle3 {

enum class ErrorCode {
  IllegalArc,
  InconsistentOutcome,
  IllegalBand,
  NotCoprime,
  ZeroP,
  SphereNotCovered,
  OutOfRange,
  NotADisk,
  NotEssential,
  WrongGenus,
  UnknownComponent,
  LocusMismatch,
  StaleWitness,
  UnclassifiedCase,
  UnknownPattern,
  ParseError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace handle3
