#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetq {

/// Failure categories raised by the library. Every thrown posetq::Error
/// carries exactly one of these.
enum class ErrorKind {
  InvalidId,
  CycleDetected,
  CapacityExceeded,
  NotAChain,
  NotIsotonic,
  NotAdjacent,
  DifferentChains,
  NotQuantifiable,
  MissingProjection,
  NotProperlyCollinear,
  NotBetween,
  NotCompatible,
  NotCoordinated,
  NotLinearlyRelated,
  SideUnknown,
  OutOfRange,
  NoSharedEndpoint,
  BasisMismatch,
  DegenerateTransform,
  CoincidentChains,
  EmptyWindow,
  ChainEscapesWindow,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string &what);

} // namespace posetq
