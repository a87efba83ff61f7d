#pragma once

#include <posetq/chain.hpp>
#include <posetq/projection.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace posetq {

enum class CollinearityCase { I, II, III, IV, V, NotCollinear };

std::string_view to_string(CollinearityCase c);

/// Set of cases whose four identities all hold for one element.
class CaseSet {
public:
  void insert(CollinearityCase c) { bits_ |= mask(c); }
  bool contains(CollinearityCase c) const { return (bits_ & mask(c)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  int count() const noexcept;

private:
  static std::uint8_t mask(CollinearityCase c) {
    return static_cast<std::uint8_t>(1U << static_cast<unsigned>(c));
  }
  std::uint8_t bits_ = 0;
};

/// Evaluates the identities of every case. Throws MissingProjection unless
/// x projects both ways onto P and onto Q. A composite projection that does
/// not exist makes the identity that uses it fail.
CaseSet matching_collinearity_cases(EventId x, const Chain &P, const Chain &Q);

/// First matching case in the order II, I, III, IV, V. An element on P or Q
/// can satisfy several cases at once; II wins so such elements count as
/// lying between the chains.
CollinearityCase collinearity_case(EventId x, const Chain &P, const Chain &Q);

bool is_properly_collinear(EventId x, const Chain &P, const Chain &Q);

enum class Betweenness { PSide, Between, QSide, None };

std::string_view to_string(Betweenness b);
Betweenness betweenness_of(CollinearityCase c);
Betweenness betweenness(EventId x, const Chain &P, const Chain &Q);

/// Every element of X is properly collinear with (P, Q), and the projections
/// of X cover every element of P and Q between the extremal images.
bool chain_properly_collinear(const Chain &X, const Chain &P, const Chain &Q);

enum class IntervalPlacement {
  SameSideP,    // [a,b]|P|Q
  Between,      // P|[a,b]|Q
  SameSideQ,    // P|Q|[a,b]
  A_P_B_Q,      // a|P|b|Q
  B_P_A_Q,      // b|P|a|Q
  P_A_Q_B,      // P|a|Q|b
  P_B_Q_A,      // P|b|Q|a
  A_P_Q_B,      // a|P|Q|b
  B_P_Q_A,      // b|P|Q|a
};

std::string_view to_string(IntervalPlacement p);

/// Throws NotProperlyCollinear when either endpoint is not.
IntervalPlacement interval_betweenness(EventId a, EventId b, const Chain &P, const Chain &Q);

/// True when every element of B that projects both ways onto A and C lies
/// between them, and at least one element does.
bool chain_between(const Chain &B, const Chain &A, const Chain &C);

/// Names of A, B, C in argument order. Throws NotBetween unless
/// chain_between(B, A, C).
std::array<std::string, 3> induced_chain_order(const ValuedChain &A, const ValuedChain &B,
                                               const ValuedChain &C);

/// Closed range of chain indices.
struct IndexRange {
  std::size_t lo = 0;
  std::size_t hi = 0;

  std::size_t count() const noexcept { return hi - lo + 1; }
  friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

/// Ranges over which the projections between P and Q are examined. The
/// forward projection maps forward_from_p (on P) onto forward_onto_q (on Q);
/// the backward projection maps backward_from_p onto backward_onto_q.
struct CoordinationWindow {
  IndexRange forward_from_p;
  IndexRange forward_onto_q;
  IndexRange backward_from_p;
  IndexRange backward_onto_q;

  /// The same window seen from Q towards P.
  CoordinationWindow swapped() const;
  friend bool operator==(const CoordinationWindow &, const CoordinationWindow &) = default;
};

/// Largest ranges on which P projects onto Q at all. Throws
/// MissingProjection when no element of P projects forward, or none
/// projects backward, onto Q.
CoordinationWindow full_window(const Chain &P, const Chain &Q);

/// Both projections are bijections between the designated ranges. Throws
/// MissingProjection when an element of a source range does not project,
/// OutOfRange when a range leaves its chain.
bool check_compatible(const Chain &P, const Chain &Q, const CoordinationWindow &window);

/// Compatible and every consecutive step keeps its length under projection.
/// Throws NotCompatible when the window is not compatible.
bool check_coordinated(const ValuedChain &P, const ValuedChain &Q,
                       const CoordinationWindow &window);

/// Each step of S of length `step` projects forward onto P with length m and
/// backward with length n.
struct LinearRelation {
  Rational m;
  Rational n;
  Rational step;

  /// (m, n) per unit of S valuation. Throws InvalidArgument when step is 0.
  LinearRelation normalized() const;
  friend bool operator==(const LinearRelation &, const LinearRelation &) = default;
};

/// Throws MissingProjection when an element of S does not project both ways
/// onto P, NotLinearlyRelated when S has fewer than two elements or any step
/// length differs from the first.
LinearRelation detect_linear_relation(const ValuedChain &S, const ValuedChain &P);

/// Largest index range of S whose elements all project both ways onto P,
/// or nullopt when none does. Such elements always form a contiguous run.
std::optional<IndexRange> quantifiable_range(const Chain &S, const Chain &P);

} // namespace posetq
