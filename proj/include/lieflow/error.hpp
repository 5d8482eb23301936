#pragma once

#include <stdexcept>
#include <string>

namespace lieflow {

enum class ErrorKind {
  NonSquare,
  EigenvalueAtMinusOne,
  NoConvergence,
  MixedAlgebras,
  MixedGroups,
  NotInGroup,
  NotInAlgebra,
  WrongAlgebra,
  ZeroVector,
  AllZero,
  InvalidTolerance,
  InvalidArgument,
  HNotInTube,
  UnknownGroup,
  UnknownSuite,
};

const char* to_string(ErrorKind kind);

/// Single exception type carrying a machine-checkable kind.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lieflow
