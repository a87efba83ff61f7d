#include <posetq/error.hpp>
#include <posetq/interval.hpp>

#include <sstream>

namespace posetq {

namespace {

ChainCoordinates coordinates_on(EventId x, const ValuedChain &chain) {
  auto c = try_quantify_event(x, chain);
  if (!c) {
    std::ostringstream oss;
    oss << "event " << x << " does not project both ways onto '" << chain.name() << "'";
    raise(ErrorKind::MissingProjection, oss.str());
  }
  return *c;
}

// The full window, after checking coordination from both sides.
CoordinationWindow require_coordinated(const ValuedChain &P, const ValuedChain &Q) {
  bool ok = false;
  CoordinationWindow w;
  try {
    w = full_window(P.chain(), Q.chain());
    ok = check_coordinated(P, Q, w) && check_coordinated(Q, P, w.swapped());
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::NotCompatible && e.kind() != ErrorKind::MissingProjection) {
      throw;
    }
  }
  if (!ok) {
    raise(ErrorKind::NotCoordinated,
          "chains '" + P.name() + "' and '" + Q.name() + "' are not coordinated");
  }
  return w;
}

bool inside(std::size_t i, const IndexRange &r) { return r.lo <= i && i <= r.hi; }

// Forward-projection values on P and Q of an endpoint lying between them.
std::pair<Rational, Rational> between_values(EventId x, const ValuedChain &P,
                                             const ValuedChain &Q) {
  Betweenness side = Betweenness::None;
  try {
    side = betweenness(x, P.chain(), Q.chain());
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::MissingProjection) {
      throw;
    }
  }
  if (side != Betweenness::Between) {
    std::ostringstream oss;
    oss << "event " << x << " is not between '" << P.name() << "' and '" << Q.name() << "'";
    raise(ErrorKind::NotBetween, oss.str());
  }
  return {coordinates_on(x, P).forward, coordinates_on(x, Q).forward};
}

} // namespace

std::string_view to_string(PairBasis basis) {
  switch (basis) {
  case PairBasis::OneChainSameSide: return "one-chain";
  case PairBasis::OneChainStraddle: return "one-chain-straddle";
  case PairBasis::TwoChain: return "two-chain";
  }
  return "?";
}

IntervalPair operator+(const IntervalPair &x, const IntervalPair &y) {
  if (x.basis != y.basis || x.label != y.label) {
    raise(ErrorKind::BasisMismatch, "cannot add a " + std::string(to_string(x.basis)) +
                                        " pair over '" + x.label + "' to a " +
                                        std::string(to_string(y.basis)) + " pair over '" +
                                        y.label + "'");
  }
  return {x.first + y.first, x.second + y.second, x.basis, x.label};
}

std::string to_string(const IntervalPair &pair) {
  return "(" + to_string(pair.first) + ", " + to_string(pair.second) + ")";
}

IntervalPair interval_pair_one_chain(const GeneralizedInterval &interval, const ValuedChain &P,
                                     Betweenness side_a, Betweenness side_b) {
  if (side_a == Betweenness::None || side_b == Betweenness::None) {
    raise(ErrorKind::SideUnknown, "endpoint side relative to '" + P.name() + "' is unknown");
  }
  return interval_pair_one_chain(coordinates_on(interval.a, P), side_a,
                                 coordinates_on(interval.b, P), side_b, P.name());
}

IntervalPair interval_pair_one_chain(const ChainCoordinates &a, Betweenness side_a,
                                     const ChainCoordinates &b, Betweenness side_b,
                                     std::string label) {
  if (side_a == Betweenness::None || side_b == Betweenness::None) {
    raise(ErrorKind::SideUnknown, "endpoint side relative to '" + label + "' is unknown");
  }
  const bool straddle = (side_a == Betweenness::PSide) != (side_b == Betweenness::PSide);
  if (straddle) {
    return {b.forward - a.backward, b.backward - a.forward, PairBasis::OneChainStraddle,
            std::move(label)};
  }
  return {b.forward - a.forward, b.backward - a.backward, PairBasis::OneChainSameSide,
          std::move(label)};
}

IntervalPair interval_pair_two_chains(const GeneralizedInterval &interval, const ValuedChain &P,
                                      const ValuedChain &Q) {
  require_coordinated(P, Q);
  const auto [pa, qa] = between_values(interval.a, P, Q);
  const auto [pb, qb] = between_values(interval.b, P, Q);
  return {pb - pa, qb - qa, PairBasis::TwoChain, P.name() + "," + Q.name()};
}

Rational length_of_pair(const IntervalPair &pair) { return (pair.first + pair.second) / 2; }

Rational distance_of_pair(const IntervalPair &pair) { return (pair.first - pair.second) / 2; }

Rational chain_distance(const ValuedChain &P, const ValuedChain &Q, EventId p, EventId q) {
  const CoordinationWindow w = require_coordinated(P, Q);
  const auto ip = P.chain().index_of(p);
  const auto iq = Q.chain().index_of(q);
  if (!ip || !iq) {
    std::ostringstream oss;
    oss << "event " << (ip ? q : p) << " is not on its chain";
    raise(ErrorKind::OutOfRange, oss.str());
  }
  if (!inside(*ip, w.forward_from_p) || !inside(*iq, w.backward_onto_q)) {
    std::ostringstream oss;
    oss << "events " << p << " and " << q << " lie outside the coordinated range";
    raise(ErrorKind::OutOfRange, oss.str());
  }
  const std::size_t pq = *forward_index(P.chain(), q);
  const std::size_t qp = *forward_index(Q.chain(), p);
  return ((P.value(*ip) - P.value(pq)) - (Q.value(qp) - Q.value(*iq))) / 2;
}

std::vector<Rational> all_chain_distances(const ValuedChain &P, const ValuedChain &Q) {
  const CoordinationWindow w = require_coordinated(P, Q);
  std::vector<Rational> out;
  for (std::size_t j = w.backward_onto_q.lo; j <= w.backward_onto_q.hi; ++j) {
    const std::size_t pq = *forward_index(P.chain(), Q[j]);
    for (std::size_t i = w.forward_from_p.lo; i <= w.forward_from_p.hi; ++i) {
      const std::size_t qp = *forward_index(Q.chain(), P[i]);
      out.push_back(((P.value(i) - P.value(pq)) - (Q.value(qp) - Q.value(j))) / 2);
    }
  }
  return out;
}

std::pair<IntervalPair, IntervalPair> decompose(const IntervalPair &pair) {
  const Rational s = (pair.first + pair.second) / 2;
  const Rational d = (pair.first - pair.second) / 2;
  return {IntervalPair{s, s, pair.basis, pair.label}, IntervalPair{d, -d, pair.basis, pair.label}};
}

std::string_view to_string(IntervalKind kind) {
  switch (kind) {
  case IntervalKind::ChainLike: return "chain-like";
  case IntervalKind::AntichainLike: return "antichain-like";
  case IntervalKind::ProjectionLike: return "projection-like";
  }
  return "?";
}

IntervalClass classify_interval(const IntervalPair &pair) {
  const int product = sign(pair.first) * sign(pair.second);
  IntervalClass out;
  out.kind = product > 0   ? IntervalKind::ChainLike
             : product < 0 ? IntervalKind::AntichainLike
                           : IntervalKind::ProjectionLike;
  out.pure = abs(pair.first) == abs(pair.second);
  return out;
}

QuantifiedInterval join_intervals(const QuantifiedInterval &first,
                                  const QuantifiedInterval &second) {
  if (first.interval.b != second.interval.a) {
    std::ostringstream oss;
    oss << "intervals end at " << first.interval.b << " and start at " << second.interval.a;
    raise(ErrorKind::NoSharedEndpoint, oss.str());
  }
  return {{first.interval.a, second.interval.b}, first.pair + second.pair};
}

ArtificialEvent artificial_event(const Rational &pa, const Rational &qa, const Rational &pb,
                                 const Rational &qb) {
  return {(pa + pb + qa - qb) / 2, (pa - pb + qa + qb) / 2};
}

ArtificialEvent split_at_artificial_event(const GeneralizedInterval &interval,
                                          const ValuedChain &P, const ValuedChain &Q) {
  require_coordinated(P, Q);
  const auto [pa, qa] = between_values(interval.a, P, Q);
  const auto [pb, qb] = between_values(interval.b, P, Q);
  return artificial_event(pa, qa, pb, qb);
}

} // namespace posetq
