#pragma once

#include <posetq/chain.hpp>
#include <posetq/projection.hpp>
#include <posetq/structure.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace posetq {

/// Ordered pair of events, comparable or not.
struct GeneralizedInterval {
  EventId a;
  EventId b;

  friend bool operator==(const GeneralizedInterval &, const GeneralizedInterval &) = default;
};

enum class PairBasis { OneChainSameSide, OneChainStraddle, TwoChain };

std::string_view to_string(PairBasis basis);

/// Two interval lengths quantifying one generalized interval. `label` names
/// the quantifying chain or chains; pairs only add when basis and label
/// agree.
struct IntervalPair {
  Rational first;
  Rational second;
  PairBasis basis = PairBasis::TwoChain;
  std::string label{};

  bool is_symmetric() const { return first == second; }
  bool is_antisymmetric() const { return first == -second; }

  /// Throws BasisMismatch when basis or label differ.
  friend IntervalPair operator+(const IntervalPair &x, const IntervalPair &y);
  friend bool operator==(const IntervalPair &, const IntervalPair &) = default;
};

/// "(4, 1)".
std::string to_string(const IntervalPair &pair);

/// Quantifies [a,b] with P alone. side_a and side_b place each endpoint
/// relative to P and its partner chain: the interval straddles P when
/// exactly one endpoint is on P's outer side. Throws SideUnknown when a side
/// is None and MissingProjection unless both endpoints project both ways.
IntervalPair interval_pair_one_chain(const GeneralizedInterval &interval, const ValuedChain &P,
                                     Betweenness side_a, Betweenness side_b);

/// The same from precomputed chain coordinates of the endpoints.
IntervalPair interval_pair_one_chain(const ChainCoordinates &a, Betweenness side_a,
                                     const ChainCoordinates &b, Betweenness side_b,
                                     std::string label);

/// Quantifies [a,b] by forward projections onto P and Q. Throws
/// NotCoordinated unless the chains are coordinated over their full window,
/// NotBetween unless both endpoints lie between P and Q. An endpoint lacking
/// a projection onto either chain is not between them.
IntervalPair interval_pair_two_chains(const GeneralizedInterval &interval, const ValuedChain &P,
                                      const ValuedChain &Q);

/// (first + second) / 2.
Rational length_of_pair(const IntervalPair &pair);
/// (first - second) / 2.
Rational distance_of_pair(const IntervalPair &pair);

/// ((v(p) - v(Pq)) - (v(Qp) - v(q))) / 2. The chains must be coordinated
/// over their full window in both directions. p ranges over the part of P
/// that projects forward onto Q, q over the part of Q that projects forward
/// onto P within that window. Throws NotCoordinated, and OutOfRange for p
/// or q outside those ranges.
Rational chain_distance(const ValuedChain &P, const ValuedChain &Q, EventId p, EventId q);

/// chain_distance for every admissible p and q, checking coordination
/// once. Throws NotCoordinated.
std::vector<Rational> all_chain_distances(const ValuedChain &P, const ValuedChain &Q);

/// Symmetric part then antisymmetric part; their sum is the input.
std::pair<IntervalPair, IntervalPair> decompose(const IntervalPair &pair);

enum class IntervalKind { ChainLike, AntichainLike, ProjectionLike };

std::string_view to_string(IntervalKind kind);

struct IntervalClass {
  IntervalKind kind = IntervalKind::ProjectionLike;
  bool pure = false;

  friend bool operator==(const IntervalClass &, const IntervalClass &) = default;
};

/// (0, 0) is ProjectionLike and pure.
IntervalClass classify_interval(const IntervalPair &pair);

struct QuantifiedInterval {
  GeneralizedInterval interval;
  IntervalPair pair;
};

/// [a,b] joined with [b,c] gives [a,c] with the pairs added. Throws
/// NoSharedEndpoint or BasisMismatch.
QuantifiedInterval join_intervals(const QuantifiedInterval &first,
                                  const QuantifiedInterval &second);

/// Projection values (p0, q0) of the event splitting [a,b] into an
/// antisymmetric part [a,0] followed by a symmetric part [0,b].
struct ArtificialEvent {
  Rational p0;
  Rational q0;

  friend bool operator==(const ArtificialEvent &, const ArtificialEvent &) = default;
};

ArtificialEvent artificial_event(const Rational &pa, const Rational &qa, const Rational &pb,
                                 const Rational &qb);

/// Same, reading p and q from forward projections onto P and Q. Throws as
/// interval_pair_two_chains.
ArtificialEvent split_at_artificial_event(const GeneralizedInterval &interval,
                                          const ValuedChain &P, const ValuedChain &Q);

} // namespace posetq
