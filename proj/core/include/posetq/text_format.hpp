#pragma once

#include <posetq/generators.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace posetq {

// One statement per line, '#' starts a comment:
//
//   events N
//   rel a b                      a <= b
//   label ID NAME                optional display name for an event
//   chain NAME e1 e2 ... : v1 v2 ...
//
// `events` comes first. Unknown keywords are rejected.

/// Throws ParseError with the offending line number, or the structural
/// error (CycleDetected, NotAChain, ...) raised while building.
Model parse_model(std::string_view text);
Model read_model(std::istream &in);

/// Writes cover edges only; parsing the result reproduces the closure,
/// labels that differ from the id, and the chains.
std::string write_model(const Model &model);

} // namespace posetq
