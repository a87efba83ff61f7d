#pragma once

#include <posetq/chain.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace posetq {

/// A poset together with named valued chains and one label per event.
struct Model {
  PosetPtr poset;
  std::vector<ValuedChain> chains;
  std::vector<std::string> labels;

  /// Throws InvalidArgument for an unknown name.
  const ValuedChain &chain(std::string_view name) const;
  /// Event by label or decimal id. Throws InvalidArgument.
  EventId event(std::string_view label_or_id) const;
};

/// Elements (u0 + k·du, v0 + k·dv) for every integer k inside the window,
/// valued k·value_step. value_step defaults to sqrt(du·dv) and must then be
/// rational.
struct LatticeChainSpec {
  std::string name;
  std::int64_t du = 1;
  std::int64_t dv = 1;
  std::int64_t u0 = 0;
  std::int64_t v0 = 0;
  std::optional<Rational> value_step;
};

/// Events (u, v) with 0 <= u < u_max, 0 <= v < v_max under the product
/// order. Event id is u·v_max + v.
struct LatticeSpec {
  std::int64_t u_max = 0;
  std::int64_t v_max = 0;
  std::vector<LatticeChainSpec> chains;
};

/// Chain {(t + X, t - X)} valued t.
LatticeChainSpec rest_chain(std::string name, std::int64_t position);
/// Chain stepping (du, dv) per tick from (u0, v0).
LatticeChainSpec boosted_chain(std::string name, std::int64_t du, std::int64_t dv,
                               std::int64_t u0 = 0, std::int64_t v0 = 0);

/// Throws EmptyWindow, ChainEscapesWindow when a chain has no element in
/// the window, InvalidArgument for steps that are negative or both zero or
/// an irrational default value step.
Model generate_lattice(const LatticeSpec &spec);

EventId lattice_event(const LatticeSpec &spec, std::int64_t u, std::int64_t v);

/// Events x_1..x_N (ids 0..N-1) and y_1..y_N (ids N..2N-1) with x_j <= y_i
/// for all i, j. Chain C_i = {x_i < y_i} valued 0 and 1. Throws
/// InvalidArgument when n < 1.
Model generate_simplex(std::size_t n);

/// Deterministic per seed. Each pair i < j of a hidden total order is
/// related with probability `density`; ids are then shuffled. Throws
/// InvalidArgument when density is outside [0, 1].
Model generate_random(std::uint64_t seed, std::size_t events, double density);

/// Appends up to `count` chains named G1, G2, ... each a longest chain
/// among events not yet used, valued 0, 1, 2, ... Chains of a single event
/// are skipped.
void add_greedy_chains(Model &model, std::size_t count);

/// Events in 2+1 dimensions with integer coordinates (t, x, y), ordered by
/// dt >= 0 and dt² >= dx² + dy².
struct EmbeddingSpec {
  struct RestChain {
    std::string name;
    std::int64_t x = 0;
    std::int64_t y = 0;
  };
  struct Point {
    std::string name;
    std::int64_t t = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
  };
  std::int64_t t_max = 0;      // rest chains tick at t = 0..t_max
  Rational value_scale{1};     // chain element at time t is valued t·value_scale
  std::vector<RestChain> chains;
  std::vector<Point> points;
};

/// Chain elements are labelled "name@t".
Model generate_embedding(const EmbeddingSpec &spec);

/// Rest chains C0, C4, C14, C18 and C25 on the x axis at those positions,
/// ticking at t = 0..50 valued t/5, with events x = (9,12), x_plane = (9,0),
/// y = (20,0) and a = (10,0), all at t = 25. Every event sits at an integer
/// distance from every chain.
EmbeddingSpec plane_configuration();

/// Rest chains R0, R2, R4 and the (4,1) boosted chain B from the origin,
/// keeping only those with an element in the window.
LatticeSpec standard_lattice(std::int64_t u_max, std::int64_t v_max);

/// "lattice:U,V" (standard_lattice), "simplex:N", "random:SEED,N,D" (with
/// three greedy chains) or "plane" (plane_configuration). Throws
/// InvalidArgument for anything else.
Model generate_named(std::string_view spec);

/// The specs exercised by a full verification run.
std::vector<std::string> builtin_generator_specs();

} // namespace posetq
