#include <posetq/error.hpp>

namespace posetq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::InvalidId: return "InvalidId";
  case ErrorKind::CycleDetected: return "CycleDetected";
  case ErrorKind::CapacityExceeded: return "CapacityExceeded";
  case ErrorKind::NotAChain: return "NotAChain";
  case ErrorKind::NotIsotonic: return "NotIsotonic";
  case ErrorKind::NotAdjacent: return "NotAdjacent";
  case ErrorKind::DifferentChains: return "DifferentChains";
  case ErrorKind::NotQuantifiable: return "NotQuantifiable";
  case ErrorKind::MissingProjection: return "MissingProjection";
  case ErrorKind::NotProperlyCollinear: return "NotProperlyCollinear";
  case ErrorKind::NotBetween: return "NotBetween";
  case ErrorKind::NotCompatible: return "NotCompatible";
  case ErrorKind::NotCoordinated: return "NotCoordinated";
  case ErrorKind::NotLinearlyRelated: return "NotLinearlyRelated";
  case ErrorKind::SideUnknown: return "SideUnknown";
  case ErrorKind::OutOfRange: return "OutOfRange";
  case ErrorKind::NoSharedEndpoint: return "NoSharedEndpoint";
  case ErrorKind::BasisMismatch: return "BasisMismatch";
  case ErrorKind::DegenerateTransform: return "DegenerateTransform";
  case ErrorKind::CoincidentChains: return "CoincidentChains";
  case ErrorKind::EmptyWindow: return "EmptyWindow";
  case ErrorKind::ChainEscapesWindow: return "ChainEscapesWindow";
  case ErrorKind::InvalidArgument: return "InvalidArgument";
  case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what),
      kind_(kind) {}

void raise(ErrorKind kind, const std::string &what) { throw Error(kind, what); }

} // namespace posetq
