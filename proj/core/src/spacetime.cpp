#include <posetq/error.hpp>
#include <posetq/spacetime.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace posetq {

std::string_view to_string(ScalarCharacter c) {
  switch (c) {
  case ScalarCharacter::TimeLike: return "time-like";
  case ScalarCharacter::SpaceLike: return "space-like";
  case ScalarCharacter::Null: return "null";
  }
  return "?";
}

ScalarResult interval_scalar(const IntervalPair &pair) {
  ScalarResult out;
  out.value = pair.first * pair.second;
  const int s = sign(out.value);
  out.character = s > 0   ? ScalarCharacter::TimeLike
                  : s < 0 ? ScalarCharacter::SpaceLike
                          : ScalarCharacter::Null;
  return out;
}

ScalarLength scalar_length(const IntervalPair &pair) {
  const Rational product = pair.first * pair.second;
  return {Real::sqrt(abs(product)), sign(product) < 0};
}

MinkowskiForm minkowski_form(const IntervalPair &pair) {
  const Rational t = (pair.first + pair.second) / 2;
  const Rational x = (pair.first - pair.second) / 2;
  return {pair.first * pair.second, t * t, x * x};
}

PairTransform::PairTransform(Rational m, Rational n) : m_(std::move(m)), n_(std::move(n)) {
  if (sign(m_) <= 0 || sign(n_) <= 0) {
    raise(ErrorKind::DegenerateTransform,
          "transform (" + to_string(m_) + ", " + to_string(n_) + ") needs m > 0 and n > 0");
  }
}

PairTransform PairTransform::from_relation(const LinearRelation &relation) {
  const LinearRelation unit = relation.normalized();
  return {unit.m, unit.n};
}

RealPair apply_pair_transform(const IntervalPair &pair, const PairTransform &t) {
  return {Real(pair.first) * Real::sqrt(t.m() / t.n()),
          Real(pair.second) * Real::sqrt(t.n() / t.m())};
}

Rational beta(const PairTransform &t) { return (t.m() - t.n()) / (t.m() + t.n()); }

Real gamma(const PairTransform &t) {
  return Real((t.m() + t.n()) / 2) / Real::sqrt(t.m() * t.n());
}

Real beta_gamma(const PairTransform &t) {
  return Real((t.m() - t.n()) / 2) / Real::sqrt(t.m() * t.n());
}

Matrix2 lorentz_matrix(const PairTransform &t) {
  const Real g = gamma(t);
  const Real bg = -beta_gamma(t);
  return {{{g, bg}, {bg, g}}};
}

PairTransform compose_transforms(const PairTransform &first, const PairTransform &second) {
  return {first.m() * second.m(), first.n() * second.n()};
}

SpacetimeCoords to_coords(const IntervalPair &pair) {
  return {(pair.first + pair.second) / 2, (pair.first - pair.second) / 2};
}

IntervalPair from_coords(const SpacetimeCoords &coords, PairBasis basis, std::string label) {
  return {coords.dt + coords.dx, coords.dt - coords.dx, basis, std::move(label)};
}

RealCoords to_coords(const RealPair &pair) {
  const Real half(Rational(1, 2));
  return {(pair.first + pair.second) * half, (pair.first - pair.second) * half};
}

RealCoords lorentz_apply(const SpacetimeCoords &coords, const PairTransform &t) {
  const Matrix2 l = lorentz_matrix(t.inverse());
  const Real dt(coords.dt);
  const Real dx(coords.dx);
  return {l[0][0] * dt + l[0][1] * dx, l[1][0] * dt + l[1][1] * dx};
}

void SubspaceSum::add(const IntervalPair &pair) {
  auto same = std::find_if(components_.begin(), components_.end(), [&](const IntervalPair &c) {
    return c.label == pair.label && c.basis == pair.basis;
  });
  if (same == components_.end()) {
    components_.push_back(pair);
  } else {
    *same = *same + pair;
  }
}

Rational SubspaceSum::scalar() const {
  Rational total = 0;
  for (const auto &c : components_) {
    total += c.first * c.second;
  }
  return total;
}

Rational pythagorean_join(const IntervalPair &a, const IntervalPair &b, bool orthogonal) {
  if (!orthogonal) {
    raise(ErrorKind::InvalidArgument, "pythagorean join needs orthogonal subspaces");
  }
  if (!a.is_antisymmetric() || !b.is_antisymmetric()) {
    raise(ErrorKind::InvalidArgument, "pythagorean join needs antisymmetric pairs");
  }
  if (a.label == b.label) {
    raise(ErrorKind::InvalidArgument,
          "pairs share the subspace '" + a.label + "' and cannot be orthogonal");
  }
  SubspaceSum sum;
  sum.add(a);
  sum.add(b);
  return -sum.scalar();
}

SphericalComponents spherical_decompose(double dt, double dr, double theta, double phi) {
  SphericalComponents out;
  out.dt = dt;
  out.x = dr * std::sin(theta) * std::cos(phi);
  out.y = dr * std::sin(theta) * std::sin(phi);
  out.z = dr * std::cos(theta);
  out.radial_scalar = dt * dt - dr * dr;
  out.cartesian_scalar = dt * dt - (out.x * out.x + out.y * out.y + out.z * out.z);
  const double scale = std::max(1.0, dt * dt + dr * dr);
  out.consistent = std::abs(out.radial_scalar - out.cartesian_scalar) <= 1e-12 * scale;
  return out;
}

Rational element_chain_distance(EventId x, const ValuedChain &P, EventId ref) {
  const auto i = P.chain().index_of(ref);
  if (!i) {
    std::ostringstream oss;
    oss << "reference " << ref << " is not on '" << P.name() << "'";
    raise(ErrorKind::InvalidArgument, oss.str());
  }
  auto c = try_quantify_event(x, P);
  if (!c) {
    std::ostringstream oss;
    oss << "event " << x << " does not project both ways onto '" << P.name() << "'";
    raise(ErrorKind::MissingProjection, oss.str());
  }
  // The reference lies on P, so P̄ref = ref.
  const Rational &v_ref = P.value(*i);
  return ((v_ref - c->forward) - (v_ref - c->backward)) / 2;
}

Rational signed_element_chain_distance(EventId x, const ValuedChain &P, EventId ref,
                                       Betweenness side) {
  if (side == Betweenness::None) {
    raise(ErrorKind::SideUnknown, "side of the event relative to '" + P.name() + "' is unknown");
  }
  const Rational magnitude = abs(element_chain_distance(x, P, ref));
  return side == Betweenness::PSide ? Rational(-magnitude) : magnitude;
}

Rational chain_separation(const ValuedChain &P, const ValuedChain &Q) {
  std::optional<EventId> p;
  std::optional<EventId> q;
  for (EventId e : P.chain().elements()) {
    if (forward_index(Q.chain(), e)) {
      p = e;
      break;
    }
  }
  for (EventId e : Q.chain().elements()) {
    if (forward_index(P.chain(), e)) {
      q = e;
      break;
    }
  }
  if (!p || !q) {
    raise(ErrorKind::MissingProjection,
          "chains '" + P.name() + "' and '" + Q.name() + "' do not project onto one another");
  }
  return abs(chain_distance(P, Q, *p, *q));
}

SubspaceProjection subspace_projection(EventId x, EventId y, const ValuedChain &P,
                                       const ValuedChain &Q) {
  const Rational d_pq = chain_separation(P, Q);
  if (d_pq == 0) {
    raise(ErrorKind::CoincidentChains,
          "chains '" + P.name() + "' and '" + Q.name() + "' are at zero distance");
  }
  const auto d = [](EventId e, const ValuedChain &C) {
    return element_chain_distance(e, C, C.chain().front());
  };
  SubspaceProjection out;
  out.value = subspace_projection_value(d(x, P), d(x, Q), d(y, P), d(y, Q), d_pq);
  for (EventId e : {x, y}) {
    const Betweenness side = betweenness(e, P.chain(), Q.chain());
    out.extrapolated = out.extrapolated || side == Betweenness::PSide ||
                       side == Betweenness::QSide;
  }
  return out;
}

double subspace_projection(double d_xp, double d_xq, double d_yp, double d_yq, double d_pq) {
  if (d_pq == 0.0) {
    raise(ErrorKind::CoincidentChains, "chains are at zero distance");
  }
  return subspace_projection_value(d_xp, d_xq, d_yp, d_yq, std::abs(d_pq));
}

std::size_t required_spatial_dimension(const std::vector<std::vector<Rational>> &squared) {
  const std::size_t n = squared.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (squared[i].size() != n) {
      raise(ErrorKind::InvalidArgument, "distance matrix is not square");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (squared[i][j] != squared[j][i]) {
        raise(ErrorKind::InvalidArgument, "distance matrix is not symmetric");
      }
    }
  }
  if (n < 2) {
    return 0;
  }
  const std::size_t k = n - 1;
  std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      g[i][j] = (squared[0][i + 1] + squared[0][j + 1] - squared[i + 1][j + 1]) / 2;
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < k; ++col) {
    std::size_t pivot = rank;
    while (pivot < k && g[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == k) {
      continue;
    }
    std::swap(g[pivot], g[rank]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r != rank && g[r][col] != 0) {
        const Rational f = g[r][col] / g[rank][col];
        for (std::size_t c = col; c < k; ++c) {
          g[r][c] -= f * g[rank][c];
        }
      }
    }
    ++rank;
  }
  return rank;
}

} // namespace posetq
