#pragma once

#include <stdexcept>
#include <string>

namespace flagclass {

enum class ErrorKind {
  InvalidLieType,
  DimensionMismatch,
  IndexOutOfRange,
  NotARoot,
  DegenerateRootString,
  CartanBracket,
  NotAFlagManifold,
  RootInTheta,
  BridgeUnavailable,
  Disconnected,
  NotATRoot,
  CapExceeded,
  NotInStabilizer,
  NotClosedUnderAction,
  Overflow,
  InvalidArgument,
  InvariantViolation,
  Io,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; callers switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flagclass
