#pragma once

#include <posetq/chain.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace posetq {

// Projections are partial maps: an absent result means the element has no
// forward (or backward) image on the chain, not an error.
//
// Both searches are binary. Along a chain the set {i : x <= c_i} is an upper
// set and {i : c_i <= x} a lower set, so the boundary index is found with
// O(log L) closure probes.

/// Index of the least chain element including x.
std::optional<std::size_t> forward_index(const Chain &chain, EventId x);
/// Index of the greatest chain element included by x.
std::optional<std::size_t> backward_index(const Chain &chain, EventId x);

std::optional<EventId> forward_project(EventId x, const Chain &chain);
std::optional<EventId> backward_project(EventId x, const Chain &chain);

enum class ProjectionCase {
  A_Incomparable,
  B_BackwardOnly,
  C_ForwardOnly,
  D_Both,
};

std::string_view to_string(ProjectionCase c);

struct ProjectionOutcome {
  ProjectionCase kind = ProjectionCase::A_Incomparable;
  std::optional<EventId> forward;
  std::optional<EventId> backward;
};

ProjectionOutcome classify_projection(EventId x, const Chain &chain);

/// Chain-based coordinates (v(Px), v(P̄x)).
struct ChainCoordinates {
  Rational forward;
  Rational backward;

  friend bool operator==(const ChainCoordinates &, const ChainCoordinates &) = default;
};

std::optional<ChainCoordinates> try_quantify_event(EventId x, const ValuedChain &chain);

/// Throws NotQuantifiable unless x projects both ways onto the chain.
ChainCoordinates quantify_event(EventId x, const ValuedChain &chain);

/// "(3,1)", with '.' standing in for a missing projection: "(2,.)".
std::string format_projection_pair(EventId x, const ValuedChain &chain);

} // namespace posetq
