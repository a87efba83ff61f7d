// Acceptance suite: one PASS/FAIL line per criterion. The optional argument
// is the path of the posetq executable, used by the last criterion.

#include "../oracles.hpp"

#include <posetq/chain.hpp>
#include <posetq/error.hpp>
#include <posetq/generators.hpp>
#include <posetq/interval.hpp>
#include <posetq/spacetime.hpp>
#include <posetq/structure.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace posetq;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Chains on a lattice window: the standard set plus a rest chain at every
// position that fits.
Model lattice_with_all_rest_chains(std::int64_t U, std::int64_t V) {
  LatticeSpec spec = standard_lattice(U, V);
  for (std::int64_t x = -((V - 1) / 2); x <= (U - 1) / 2; ++x) {
    if (x == 0 || x == 2 || x == 4) {
      continue;
    }
    spec.chains.push_back(rest_chain("X" + std::to_string(x), x));
  }
  return generate_lattice(spec);
}

std::vector<Model> lattices_up_to(std::int64_t size) {
  std::vector<Model> out;
  for (std::int64_t U = 1; U <= size; ++U) {
    for (std::int64_t V = 1; V <= size; ++V) {
      out.push_back(lattice_with_all_rest_chains(U, V));
    }
  }
  return out;
}

std::vector<Model> builtin_models() {
  std::vector<Model> out;
  for (const auto &spec : builtin_generator_specs()) {
    out.push_back(generate_named(spec));
  }
  return out;
}

bool near(double a, double b, double scale = 1.0) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b), scale});
}

Rational random_rational(std::mt19937_64 &rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  return Rational(num(rng), den(rng));
}

// Both directions have a quantifiable run of at least three elements on
// which the projected step lengths are constant.
bool linearly_related(const ValuedChain &S, const ValuedChain &P) {
  for (int dir = 0; dir < 2; ++dir) {
    const ValuedChain &from = dir == 0 ? S : P;
    const ValuedChain &onto = dir == 0 ? P : S;
    const auto range = quantifiable_range(from.chain(), onto.chain());
    if (!range || range->count() < 3) {
      return false;
    }
    try {
      detect_linear_relation(from.slice(range->lo, range->hi), onto);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::NotLinearlyRelated) {
        throw;
      }
      return false;
    }
  }
  return true;
}

struct Placed {
  EventId event;
  ChainCoordinates coords;
  Betweenness side;
};

std::vector<Placed> collinear_events(const Model &m, const ValuedChain &P, const ValuedChain &Q) {
  std::vector<Placed> out;
  for (std::size_t i = 0; i < m.poset->size(); ++i) {
    const EventId x(i);
    const auto c = try_quantify_event(x, P);
    if (!c || !oracle::forward(Q.chain(), x) || !oracle::backward(Q.chain(), x)) {
      continue;
    }
    const Betweenness side = betweenness(x, P.chain(), Q.chain());
    if (side != Betweenness::None) {
      out.push_back({x, *c, side});
    }
  }
  return out;
}

// 1
Outcome projection_oracle() {
  const auto start = Clock::now();
  std::size_t posets = 0, lattices = 0, probes = 0;
  auto compare = [&](const Model &m) -> std::string {
    for (const auto &c : m.chains) {
      for (std::size_t x = 0; x < m.poset->size(); ++x) {
        const EventId e(x);
        ++probes;
        if (forward_index(c.chain(), e) != oracle::forward(c.chain(), e) ||
            backward_index(c.chain(), e) != oracle::backward(c.chain(), e)) {
          std::ostringstream oss;
          oss << "event " << x << " on chain '" << c.name() << "' disagrees";
          return oss.str();
        }
      }
    }
    return {};
  };
  for (std::uint64_t seed = 1; seed <= 240; ++seed) {
    const std::size_t n = 2 + seed % 63;
    const double density = 0.02 * static_cast<double>(seed % 20);
    auto m = generate_random(seed, n, density);
    add_greedy_chains(m, 4);
    // Every other element of each greedy chain, so gaps are exercised.
    const std::size_t greedy = m.chains.size();
    for (std::size_t i = 0; i < greedy; ++i) {
      std::vector<EventId> sparse;
      std::vector<Rational> values;
      for (std::size_t k = 0; k < m.chains[i].size(); k += 2) {
        sparse.push_back(m.chains[i][k]);
        values.emplace_back(static_cast<long>(k));
      }
      m.chains.push_back(make_valued_chain(m.poset, sparse, values, "S" + std::to_string(i)));
    }
    if (auto err = compare(m); !err.empty()) {
      return {false, "random seed " + std::to_string(seed) + ": " + err};
    }
    ++posets;
  }
  for (const auto &m : lattices_up_to(10)) {
    if (auto err = compare(m); !err.empty()) {
      return {false, "lattice: " + err};
    }
    ++lattices;
  }
  const double s = seconds_since(start);
  std::ostringstream oss;
  oss << posets << " random posets, " << lattices << " lattice windows, " << probes
      << " chain probes in " << s << " s";
  return {s < 10.0, oss.str()};
}

// 2
Outcome length_additivity() {
  std::size_t splits = 0;
  std::vector<Model> models = builtin_models();
  for (auto &m : lattices_up_to(10)) {
    models.push_back(std::move(m));
  }
  for (const auto &m : models) {
    for (const auto &c : m.chains) {
      const std::size_t L = c.size();
      for (std::size_t a = 0; a < L; ++a) {
        for (std::size_t b = a; b < L; ++b) {
          for (std::size_t d = b; d < L; ++d) {
            const ClosedInterval ab(c, a, b), bd(c, b, d);
            const auto ad = join_closed_intervals(ab, bd);
            const Rational whole = c.value(d) - c.value(a);
            if (interval_length(ad) != whole ||
                interval_length(ab) + interval_length(bd) != whole) {
              return {false, "split failed on chain '" + c.name() + "'"};
            }
            ++splits;
          }
        }
      }
      // Three-way joins in both associations.
      for (std::size_t a = 0; a + 3 <= L && a < 12; ++a) {
        for (std::size_t b = a; b < L && b < a + 6; ++b) {
          for (std::size_t d = b; d < L && d < b + 6; ++d) {
            for (std::size_t e = d; e < L && e < d + 6; ++e) {
              const ClosedInterval x(c, a, b), y(c, b, d), z(c, d, e);
              const auto left = join_closed_intervals(join_closed_intervals(x, y), z);
              const auto right = join_closed_intervals(x, join_closed_intervals(y, z));
              if (!(left == right) || interval_length(left) != interval_length(right)) {
                return {false, "association differs on chain '" + c.name() + "'"};
              }
            }
          }
        }
      }
    }
  }
  return {true, std::to_string(splits) + " splits over " + std::to_string(models.size()) +
                    " models"};
}

// Consecutive projected lengths by linear scan.
bool oracle_coordinated(const ValuedChain &P, const ValuedChain &Q) {
  std::optional<std::pair<std::size_t, std::size_t>> prev;
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto f = oracle::forward(Q.chain(), P[i]);
    if (!f) {
      continue;
    }
    if (prev) {
      if (*f != prev->second + 1 ||
          Q.value(*f) - Q.value(prev->second) != P.value(i) - P.value(prev->first)) {
        return false;
      }
    }
    prev = {i, *f};
  }
  return true;
}

// 3
Outcome coordination() {
  std::size_t pairs = 0, broken = 0;
  for (std::int64_t size : {16, 24}) {
    LatticeSpec spec{size, size, {}};
    for (std::int64_t x = -3; x <= 3; ++x) {
      spec.chains.push_back(rest_chain("R" + std::to_string(x), x));
    }
    const auto m = generate_lattice(spec);
    for (const auto &P : m.chains) {
      for (const auto &Q : m.chains) {
        const auto w = full_window(P.chain(), Q.chain());
        if (!check_coordinated(P, Q, w) || !check_coordinated(Q, P, w.swapped()) ||
            !oracle_coordinated(P, Q)) {
          return {false, "rest chains '" + P.name() + "' and '" + Q.name() + "' at " +
                             std::to_string(size)};
        }
        ++pairs;
        if (&P == &Q) {
          continue;
        }
        std::vector<Rational> doubled;
        for (const auto &v : Q.values()) {
          doubled.push_back(v * 2);
        }
        const auto fast = Q.revalued(doubled);
        if (check_coordinated(P, fast, full_window(P.chain(), fast.chain())) ||
            oracle_coordinated(P, fast)) {
          return {false, "double-rate '" + Q.name() + "' still coordinated with '" + P.name() +
                             "'"};
        }
        ++broken;
      }
    }
  }
  return {true, std::to_string(pairs) + " coordinated pairs, " + std::to_string(broken) +
                    " double-rate revaluations rejected"};
}

// 4
Outcome distance_constancy() {
  std::size_t pairs = 0, choices = 0;
  std::vector<Model> models = builtin_models();
  models.push_back(lattice_with_all_rest_chains(16, 16));
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    auto m = generate_random(seed, 40, 0.1);
    add_greedy_chains(m, 4);
    models.push_back(std::move(m));
  }
  for (const auto &m : models) {
    for (const auto &P : m.chains) {
      for (const auto &Q : m.chains) {
        std::vector<Rational> all;
        try {
          all = all_chain_distances(P, Q);
        } catch (const Error &e) {
          if (e.kind() == ErrorKind::NotCoordinated) {
            continue;
          }
          throw;
        }
        const auto w = full_window(P.chain(), Q.chain());
        const auto &rp = w.forward_from_p;
        const auto &rq = w.backward_onto_q;
        std::size_t k = 0;
        for (std::size_t j = rq.lo; j <= rq.hi; ++j) {
          for (std::size_t i = rp.lo; i <= rp.hi; ++i, ++k) {
            const auto pq = *oracle::forward(P.chain(), Q[j]);
            const auto qp = *oracle::forward(Q.chain(), P[i]);
            const Rational expect =
                ((P.value(i) - P.value(pq)) - (Q.value(qp) - Q.value(j))) / 2;
            if (k >= all.size() || all[k] != expect) {
              return {false, "formula mismatch for '" + P.name() + "', '" + Q.name() + "'"};
            }
            if (expect != all.front()) {
              return {false, "distance from '" + P.name() + "' to '" + Q.name() +
                                 "' takes the values " + to_string(all.front()) + " and " +
                                 to_string(expect)};
            }
          }
        }
        if (k != all.size()) {
          return {false, "all_chain_distances size differs for '" + P.name() + "'"};
        }
        for (std::size_t i : {rp.lo, rp.hi}) {
          for (std::size_t j : {rq.lo, rq.hi}) {
            if (chain_distance(P, Q, P[i], Q[j]) != all.front()) {
              return {false, "chain_distance disagrees for '" + P.name() + "'"};
            }
          }
        }
        if (rp.hi + 1 < P.size()) {
          try {
            chain_distance(P, Q, P[rp.hi + 1], Q[rq.lo]);
            return {false, "chain_distance accepted p outside the range for '" + P.name() + "'"};
          } catch (const Error &e) {
            if (e.kind() != ErrorKind::OutOfRange) {
              throw;
            }
          }
        }
        ++pairs;
        choices += all.size();
      }
    }
  }
  return {pairs > 0, std::to_string(pairs) + " coordinated pairs, " + std::to_string(choices) +
                         " (p,q) choices, each pair constant"};
}

// Closed-form chain value of the forward and backward projections of
// lattice event (u, v) onto the standard chains.
ChainCoordinates lattice_coords(const std::string &chain, std::int64_t u, std::int64_t v) {
  if (chain == "B") {
    const std::int64_t f = std::max((u + 3) / 4, v);
    const std::int64_t b = std::min(u / 4, v);
    return {Rational(2 * f), Rational(2 * b)};
  }
  const std::int64_t X = std::stoll(chain.substr(1));
  return {Rational(oracle::rest_forward(u, v, X)), Rational(oracle::rest_backward(u, v, X))};
}

// 5
Outcome scalar_invariance() {
  std::size_t intervals = 0, pairs = 0;
  for (std::int64_t size : {16, 24}) {
    const auto spec = standard_lattice(size, size);
    const auto m = generate_lattice(spec);
    for (const auto &P : m.chains) {
      for (const auto &S : m.chains) {
        if (&P == &S || !linearly_related(S, P)) {
          continue;
        }
        ++pairs;
        const auto on_p = collinear_events(m, P, S);
        const auto on_s = collinear_events(m, S, P);
        std::map<std::size_t, Placed> by_event;
        for (const auto &e : on_s) {
          by_event.emplace(e.event.index, e);
        }
        std::vector<std::pair<Placed, Placed>> both;
        for (const auto &e : on_p) {
          const auto it = by_event.find(e.event.index);
          if (it == by_event.end()) {
            continue;
          }
          const std::int64_t u = static_cast<std::int64_t>(e.event.index) / spec.v_max;
          const std::int64_t v = static_cast<std::int64_t>(e.event.index) % spec.v_max;
          if (!(lattice_coords(P.name(), u, v) == e.coords) ||
              !(lattice_coords(S.name(), u, v) == it->second.coords)) {
            return {false, "lattice coordinates disagree at " + m.labels[e.event.index]};
          }
          both.emplace_back(e, it->second);
        }
        for (const auto &[pa, sa] : both) {
          for (const auto &[pb, sb] : both) {
            const auto x = interval_pair_one_chain(pa.coords, pa.side, pb.coords, pb.side, {});
            const auto y = interval_pair_one_chain(sa.coords, sa.side, sb.coords, sb.side, {});
            if (x.first * x.second != y.first * y.second) {
              return {false, "[" + m.labels[pa.event.index] + ", " + m.labels[pb.event.index] +
                                 "] differs between '" + P.name() + "' and '" + S.name() + "'"};
            }
            ++intervals;
          }
        }
      }
    }
  }
  const auto spot = apply_pair_transform({2, 2}, PairTransform(4, 1));
  const bool spot_ok = spot.first.is_exact() && spot.second.is_exact() &&
                       spot.first.exact() == 4 && spot.second.exact() == 1 &&
                       spot.first.exact() * spot.second.exact() == Rational(2 * 2);
  if (!spot_ok) {
    return {false, "(2,2) under (4,1) is not (4,1)"};
  }
  return {intervals > 0, std::to_string(intervals) + " intervals over " + std::to_string(pairs) +
                             " chain pairs; (2,2) -> (4,1), 4 = 4"};
}

// 6
Outcome lorentz_equivalence() {
  std::mt19937_64 rng(6);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Rational m = random_rational(rng, 1, 40, 9);
    const Rational n = random_rational(rng, 1, 40, 9);
    const PairTransform t(m, n);
    const SpacetimeCoords c{random_rational(rng, -30, 30, 7), random_rational(rng, -30, 30, 7)};
    const RealCoords boost = lorentz_apply(c, t);
    const RealCoords route = to_coords(apply_pair_transform(from_coords(c), t));
    // Textbook boost at velocity -beta.
    const double b = to_double((m - n) / (m + n));
    const double g = 1.0 / std::sqrt(1.0 - b * b);
    const double dt = to_double(c.dt), dx = to_double(c.dx);
    const double et = g * (dt + b * dx), ex = g * (dx + b * dt);
    if (!near(boost.dt.value(), route.dt.value()) || !near(boost.dx.value(), route.dx.value()) ||
        !near(boost.dt.value(), et, g * std::abs(dt) + g * std::abs(dx)) ||
        !near(boost.dx.value(), ex, g * std::abs(dt) + g * std::abs(dx))) {
      return {false, "sample " + std::to_string(i) + " differs"};
    }
    worst = std::max({worst, std::abs(boost.dt.value() - route.dt.value()),
                      std::abs(boost.dx.value() - route.dx.value())});
  }
  const PairTransform t(4, 1);
  const Real g = gamma(t);
  if (beta(t) != Rational(3, 5) || !g.is_exact() || g.exact() != Rational(5, 4)) {
    return {false, "(4,1) does not give beta 3/5, gamma 5/4"};
  }
  std::ostringstream oss;
  oss << "1000 samples, largest difference " << worst << "; (4,1): beta 3/5, gamma 5/4";
  return {true, oss.str()};
}

// 7
Outcome velocity_addition() {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const PairTransform a(random_rational(rng, 1, 50, 11), random_rational(rng, 1, 50, 11));
    const PairTransform b(random_rational(rng, 1, 50, 11), random_rational(rng, 1, 50, 11));
    const Rational b1 = beta(a), b2 = beta(b);
    if (beta(compose_transforms(a, b)) != (b1 + b2) / (1 + b1 * b2)) {
      return {false, "sample " + std::to_string(i) + " breaks the addition law"};
    }
  }
  const PairTransform t(4, 1);
  if (beta(compose_transforms(t, t)) != Rational(15, 17)) {
    return {false, "(4,1) composed with itself is not 15/17"};
  }
  return {true, "1000 exact samples; (4,1) o (4,1) gives 15/17"};
}

// 8
Outcome null_invariance() {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 1000; ++i) {
    const PairTransform t(random_rational(rng, 1, 50, 11), random_rational(rng, 1, 50, 11));
    const Rational d = random_rational(rng, -30, 30, 7);
    for (const IntervalPair &p : {IntervalPair{d, 0}, IntervalPair{0, d}}) {
      const auto r = apply_pair_transform(p, t);
      if (r.first.value() != 0.0 && r.second.value() != 0.0) {
        return {false, "null pair lost its zero component"};
      }
    }
  }
  std::size_t rejected = 0;
  for (const auto &[m, n] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {0, 0}, {-1, 2}}) {
    try {
      PairTransform t(m, n);
    } catch (const Error &e) {
      rejected += e.kind() == ErrorKind::DegenerateTransform;
    }
  }
  return {rejected == 4, "2000 null pairs stay null; " + std::to_string(rejected) +
                             "/4 degenerate transforms rejected"};
}

// 9
Outcome decomposition() {
  std::mt19937_64 rng(9);
  const int cases = 20000;
  for (int i = 0; i < cases; ++i) {
    const IntervalPair p{random_rational(rng, -99, 99, 13), random_rational(rng, -99, 99, 13)};
    const auto [sym, anti] = decompose(p);
    if (!sym.is_symmetric() || !anti.is_antisymmetric() || !(sym + anti == p)) {
      return {false, "reconstruction failed for " + to_string(p)};
    }
    const Rational dt = (p.first + p.second) / 2, dx = (p.first - p.second) / 2;
    const auto f = minkowski_form(p);
    if (p.first * p.second != dt * dt - dx * dx || f.s2 != p.first * p.second ||
        f.t2 != dt * dt || f.x2 != dx * dx) {
      return {false, "Minkowski form failed for " + to_string(p)};
    }
  }
  return {true, std::to_string(cases) + " random rational pairs"};
}

// 10
Outcome sign_preservation() {
  std::size_t chain_pairs = 0, intervals = 0;
  for (const auto &m : builtin_models()) {
    const std::size_t n = m.poset->size();
    std::vector<std::uint8_t> seen(n * n, 0);
    for (const auto &P : m.chains) {
      for (const auto &Q : m.chains) {
        if (&P == &Q || !linearly_related(P, Q)) {
          continue;
        }
        ++chain_pairs;
        const auto events = collinear_events(m, P, Q);
        for (const auto &a : events) {
          for (const auto &b : events) {
            const auto c = classify_interval(
                interval_pair_one_chain(a.coords, a.side, b.coords, b.side, {}));
            if (c.kind == IntervalKind::ProjectionLike) {
              continue;
            }
            const std::uint8_t kind = c.kind == IntervalKind::ChainLike ? 1 : 2;
            auto &slot = seen[a.event.index * n + b.event.index];
            if (slot != 0 && slot != kind) {
              return {false, "[" + m.labels[a.event.index] + ", " + m.labels[b.event.index] +
                                 "] flips against '" + P.name() + "'|'" + Q.name() + "'"};
            }
            slot = kind;
            ++intervals;
          }
        }
      }
    }
  }
  return {chain_pairs > 0, std::to_string(intervals) + " interval classifications over " +
                               std::to_string(chain_pairs) + " chain pairs"};
}

// 11
Outcome simplex() {
  for (std::size_t N = 2; N <= 8; ++N) {
    const auto m = generate_simplex(N);
    std::optional<Rational> magnitude;
    for (const auto &P : m.chains) {
      for (const auto &Q : m.chains) {
        if (&P == &Q) {
          continue;
        }
        for (const auto &d : all_chain_distances(P, Q)) {
          if (magnitude && abs(d) != *magnitude) {
            return {false, "N=" + std::to_string(N) + " has unequal distances"};
          }
          magnitude = abs(d);
        }
      }
    }
    if (!magnitude) {
      return {false, "N=" + std::to_string(N) + " has no distances"};
    }
    if (N == 3) {
      for (const auto &P : m.chains) {
        for (const auto &Q : m.chains) {
          if (&P == &Q) continue;
          const auto pq = *oracle::forward(P.chain(), Q[0]);
          const auto qp = *oracle::forward(Q.chain(), P[0]);
          const Rational brute = ((P.value(0) - P.value(pq)) - (Q.value(qp) - Q.value(0))) / 2;
          if (abs(brute) != 1 || *magnitude != 1) {
            return {false, "N=3 distance magnitude is not 1"};
          }
        }
      }
    }
  }
  return {true, "N = 2..8 equal pairwise distances; N=3 magnitude 1"};
}

// 12
Outcome subspace_projection_consistency() {
  const auto spec = plane_configuration();
  const auto m = generate_embedding(spec);
  const EventId x = m.event("x"), xp = m.event("x_plane"), y = m.event("y"), a = m.event("a");
  std::map<std::string, std::int64_t> pos;
  for (const auto &c : spec.chains) {
    pos[c.name] = c.x;
  }
  std::size_t pairs = 0;
  for (const auto &P : m.chains) {
    for (const auto &Q : m.chains) {
      if (&P == &Q) {
        continue;
      }
      const Rational dir = pos[Q.name()] > pos[P.name()] ? 1 : -1;
      const Rational expect = dir * Rational(20 - 9) * spec.value_scale;
      const auto off = subspace_projection(x, y, P, Q);
      const auto on = subspace_projection(xp, y, P, Q);
      if (!near(to_double(off.value), to_double(expect)) || off.value != on.value) {
        return {false, "pair '" + P.name() + "', '" + Q.name() + "' gives " +
                           to_string(off.value) + " off-axis and " + to_string(on.value) +
                           " in-plane"};
      }
      ++pairs;
    }
  }
  for (double h : {0.0, 0.25, 1.0, 7.5, 40.0}) {
    const double v = subspace_projection(std::sqrt(4 + h * h), std::sqrt(9 + h * h),
                                         std::sqrt(16 + h * h), std::sqrt(1 + h * h), 5.0);
    if (!near(v, 2.0)) {
      return {false, "displacement " + std::to_string(h) + " changes the value"};
    }
  }
  const auto in_plane = subspace_projection(a, y, m.chain("C0"), m.chain("C25"));
  if (in_plane.value != 2 || subspace_projection(2.0, 3.0, 4.0, 1.0, 5.0) != 2.0) {
    return {false, "in-plane example gives " + to_string(in_plane.value)};
  }
  return {true, std::to_string(pairs) + " chain pairs agree with the Euclidean value; " +
                    "off-axis endpoints cancel; in-plane example is 2"};
}

// 13
Outcome spherical() {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> dist(-50, 50), radius(0, 50),
      polar(0, std::numbers::pi), azimuth(0, 2 * std::numbers::pi);
  const int cases = 10000;
  for (int i = 0; i < cases; ++i) {
    const double dt = dist(rng), dr = radius(rng), th = polar(rng), ph = azimuth(rng);
    const auto s = spherical_decompose(dt, dr, th, ph);
    const double x = dr * std::sin(th) * std::cos(ph), y = dr * std::sin(th) * std::sin(ph),
                 z = dr * std::cos(th);
    const double scale = dt * dt + dr * dr;
    const double cart = dt * dt - (x * x + y * y + z * z);
    if (!s.consistent || !near(s.radial_scalar, dt * dt - dr * dr, scale) ||
        !near(s.cartesian_scalar, cart, scale) ||
        !near(s.radial_scalar, s.cartesian_scalar, scale) || !near(s.x, x, dr) ||
        !near(s.y, y, dr) || !near(s.z, z, dr)) {
      return {false, "sample " + std::to_string(i) + " disagrees"};
    }
  }
  return {true, std::to_string(cases) + " random samples"};
}

// 14
Outcome cli_verify(const char *cli) {
  if (cli == nullptr) {
    return {false, "no posetq executable given"};
  }
  const auto start = Clock::now();
  const std::string cmd = std::string(cli) + " verify 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    return {false, "cannot run " + cmd};
  }
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) {
    out.append(buf, n);
  }
  const int raw = pclose(pipe);
  const double s = seconds_since(start);
  const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::size_t failures = 0;
  std::string first_failure;
  std::istringstream lines(out);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("FAIL", 0) == 0) {
      if (failures++ == 0) first_failure = line;
    }
  }
  std::ostringstream oss;
  oss << "exit " << code << " in " << s << " s";
  if (failures > 0) {
    oss << "; " << failures << " failing checks, first: " << first_failure;
  }
  return {code == 0 && s < 60.0, oss.str()};
}

} // namespace

int main(int argc, char **argv) {
  const char *cli = argc > 1 ? argv[1] : nullptr;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"projection oracle equivalence", projection_oracle},
      {"length additivity and associativity", length_additivity},
      {"coordination of lattice rest chains", coordination},
      {"distance well-definedness", distance_constancy},
      {"scalar invariance", scalar_invariance},
      {"Lorentz equivalence", lorentz_equivalence},
      {"velocity addition", velocity_addition},
      {"null invariance", null_invariance},
      {"decomposition identities", decomposition},
      {"sign preservation", sign_preservation},
      {"simplex distances", simplex},
      {"subspace projection consistency", subspace_projection_consistency},
      {"spherical and Cartesian scalars", spherical},
      {"verify over built-in generators", [cli] { return cli_verify(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = Clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << ' ' << (i + 1 < 10 ? " " : "") << i + 1 << ' '
              << criteria[i].first << ": " << o.detail << " [" << seconds_since(start) << " s]"
              << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
