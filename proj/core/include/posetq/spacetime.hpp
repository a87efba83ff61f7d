#pragma once

#include <posetq/interval.hpp>
#include <posetq/rational.hpp>
#include <posetq/structure.hpp>

#include <array>
#include <string>
#include <vector>

namespace posetq {

enum class ScalarCharacter { TimeLike, SpaceLike, Null };

std::string_view to_string(ScalarCharacter c);

struct ScalarResult {
  Rational value;
  ScalarCharacter character = ScalarCharacter::Null;
};

/// Δp·Δq, signature (+,-,-,-).
ScalarResult interval_scalar(const IntervalPair &pair);

/// sqrt(|Δp·Δq|), flagged imaginary for antichain-like pairs.
struct ScalarLength {
  Real magnitude;
  bool imaginary = false;
};

ScalarLength scalar_length(const IntervalPair &pair);

/// Δs² = Δt² - Δx².
struct MinkowskiForm {
  Rational s2;
  Rational t2;
  Rational x2;
};

MinkowskiForm minkowski_form(const IntervalPair &pair);

/// A unit step on one chain projects to lengths (m, n) on the other.
class PairTransform {
public:
  /// Throws DegenerateTransform unless m > 0 and n > 0.
  PairTransform(Rational m, Rational n);
  /// From a detected relation, per unit step.
  static PairTransform from_relation(const LinearRelation &relation);

  const Rational &m() const noexcept { return m_; }
  const Rational &n() const noexcept { return n_; }
  PairTransform inverse() const { return {n_, m_}; }

  friend bool operator==(const PairTransform &, const PairTransform &) = default;

private:
  Rational m_;
  Rational n_;
};

struct RealPair {
  Real first;
  Real second;
};

/// (Δp·sqrt(m/n), Δq·sqrt(n/m)).
RealPair apply_pair_transform(const IntervalPair &pair, const PairTransform &t);

/// (m - n) / (m + n).
Rational beta(const PairTransform &t);
/// (m + n) / (2 sqrt(mn)).
Real gamma(const PairTransform &t);
/// (m - n) / (2 sqrt(mn)).
Real beta_gamma(const PairTransform &t);

using Matrix2 = std::array<std::array<Real, 2>, 2>;

/// [[γ, -βγ], [-βγ, γ]] with β = beta(t).
Matrix2 lorentz_matrix(const PairTransform &t);

/// (m1·m2, n1·n2).
PairTransform compose_transforms(const PairTransform &first, const PairTransform &second);

struct SpacetimeCoords {
  Rational dt;
  Rational dx;

  friend bool operator==(const SpacetimeCoords &, const SpacetimeCoords &) = default;
};

struct RealCoords {
  Real dt;
  Real dx;
};

SpacetimeCoords to_coords(const IntervalPair &pair);
IntervalPair from_coords(const SpacetimeCoords &coords, PairBasis basis = PairBasis::TwoChain,
                         std::string label = {});
RealCoords to_coords(const RealPair &pair);

/// The coordinate form of apply_pair_transform(·, t). Carrying a pair from
/// P to P' mixes dt and dx by lorentz_matrix(t.inverse()), the boost of
/// velocity -beta(t).
RealCoords lorentz_apply(const SpacetimeCoords &coords, const PairTransform &t);

/// Pairs quantified in different subspaces. Pairs with the same label add
/// componentwise; across labels only the scalars add.
class SubspaceSum {
public:
  void add(const IntervalPair &pair);
  const std::vector<IntervalPair> &components() const noexcept { return components_; }
  /// Sum of the component scalars.
  Rational scalar() const;

private:
  std::vector<IntervalPair> components_;
};

/// Δc² = Δa² + Δb² for pure antisymmetric pairs in orthogonal subspaces.
/// Throws InvalidArgument unless both pairs are antisymmetric, carry
/// distinct labels, and `orthogonal` is set.
Rational pythagorean_join(const IntervalPair &a, const IntervalPair &b, bool orthogonal);

struct SphericalComponents {
  double dt = 0;
  double x = 0;
  double y = 0;
  double z = 0;
  double radial_scalar = 0;    // dt² - dr²
  double cartesian_scalar = 0; // dt² - x² - y² - z²
  bool consistent = false;     // the two scalars agree within 1e-12
};

SphericalComponents spherical_decompose(double dt, double dr, double theta, double phi);

/// (v(ref) - v(Px) - (v(P̄ref) - v(P̄x))) / 2 for ref on P; always <= 0.
/// Throws MissingProjection unless x projects both ways onto P, and
/// InvalidArgument when ref is not on P.
Rational element_chain_distance(EventId x, const ValuedChain &P, EventId ref);

/// Magnitude of element_chain_distance, negative when x is on the outer side
/// of P (side PSide) and positive otherwise. Throws SideUnknown for None.
Rational signed_element_chain_distance(EventId x, const ValuedChain &P, EventId ref,
                                       Betweenness side);

/// ((d(y,P)² - d(y,Q)²) - (d(x,P)² - d(x,Q)²)) / (2 d(P,Q)).
template <typename T>
T subspace_projection_value(const T &d_xp, const T &d_xq, const T &d_yp, const T &d_yq,
                            const T &d_pq) {
  return ((d_yp * d_yp - d_yq * d_yq) - (d_xp * d_xp - d_xq * d_xq)) / (d_pq + d_pq);
}

struct SubspaceProjection {
  Rational value;
  /// An endpoint lies outside the slab between P and Q.
  bool extrapolated = false;
};

/// Poset form: the four element distances and |d(P,Q)| are measured on the
/// chains. Throws CoincidentChains, MissingProjection, NotCoordinated.
SubspaceProjection subspace_projection(EventId x, EventId y, const ValuedChain &P,
                                       const ValuedChain &Q);

/// Formula form over plain distances. Throws CoincidentChains.
double subspace_projection(double d_xp, double d_xq, double d_yp, double d_yq, double d_pq);

/// |d(P,Q)| for coordinated chains, measured at the first element of P with a
/// forward image on Q. Throws NotCoordinated, MissingProjection.
Rational chain_separation(const ValuedChain &P, const ValuedChain &Q);

/// Rank of the Gram matrix of points with the given squared distances,
/// i.e. the least Euclidean dimension embedding them. Throws
/// InvalidArgument unless the matrix is square and symmetric.
std::size_t required_spatial_dimension(const std::vector<std::vector<Rational>> &squared);

} // namespace posetq
