#include <posetq/error.hpp>
#include <posetq/interval.hpp>
#include <posetq/projection.hpp>
#include <posetq/spacetime.hpp>
#include <posetq/structure.hpp>
#include <posetq/text_format.hpp>
#include <posetq/verify.hpp>

#include <chrono>
#include <functional>
#include <future>
#include <sstream>

namespace posetq {

namespace {

using Check = std::function<std::string(const Model &)>;

std::string describe(EventId a, EventId b) {
  std::ostringstream oss;
  oss << "[" << a << ", " << b << "]";
  return oss.str();
}

std::string closure_duality(const Model &m) {
  const Poset &p = *m.poset;
  if (!p.dual().dual().same_closure(p)) {
    return "reversing the order twice changes the closure";
  }
  const auto &covers = p.cover_edges();
  if (!Poset::build(p.size(), covers, std::max(p.size(), Poset::default_capacity))
           .same_closure(p)) {
    return "cover edges do not regenerate the closure";
  }
  return {};
}

std::string projection_oracle(const Model &m) {
  const Poset &p = *m.poset;
  for (const auto &c : m.chains) {
    for (std::size_t x = 0; x < p.size(); ++x) {
      const EventId e(x);
      std::optional<std::size_t> f;
      std::optional<std::size_t> b;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (!f && p.leq(e, c[i])) {
          f = i;
        }
        if (p.leq(c[i], e)) {
          b = i;
        }
      }
      if (f != forward_index(c.chain(), e) || b != backward_index(c.chain(), e)) {
        return "projection of event " + std::to_string(x) + " onto '" + c.name() +
               "' disagrees with a linear scan";
      }
    }
  }
  return {};
}

std::string length_additivity(const Model &m) {
  for (const auto &c : m.chains) {
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a; b < c.size(); ++b) {
        const ClosedInterval ab(c, a, b);
        for (std::size_t d = b; d < c.size(); ++d) {
          const ClosedInterval bd(c, b, d);
          if (interval_length(join_closed_intervals(ab, bd)) !=
              interval_length(ab) + interval_length(bd)) {
            return "lengths on '" + c.name() + "' are not additive";
          }
        }
      }
    }
  }
  return {};
}

bool projects_both_ways(EventId x, const Chain &c) {
  return forward_index(c, x) && backward_index(c, x);
}

std::string case_duality(const Model &m) {
  const PosetPtr dual = share(m.poset->dual());
  const auto reversed = [&](const Chain &c) {
    std::vector<EventId> e(c.elements().rbegin(), c.elements().rend());
    return Chain(dual, std::move(e));
  };
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    for (std::size_t j = 0; j < m.chains.size(); ++j) {
      if (i == j) {
        continue;
      }
      const Chain &P = m.chains[i].chain();
      const Chain &Q = m.chains[j].chain();
      const Chain dP = reversed(P);
      const Chain dQ = reversed(Q);
      for (std::size_t x = 0; x < m.poset->size(); ++x) {
        const EventId e(x);
        if (!projects_both_ways(e, P) || !projects_both_ways(e, Q)) {
          continue;
        }
        const CaseSet primal = matching_collinearity_cases(e, P, Q);
        const CaseSet mirror = matching_collinearity_cases(e, dP, dQ);
        using C = CollinearityCase;
        const bool ok = primal.contains(C::I) == mirror.contains(C::I) &&
                        primal.contains(C::II) == mirror.contains(C::II) &&
                        primal.contains(C::III) == mirror.contains(C::III) &&
                        primal.contains(C::IV) == mirror.contains(C::V) &&
                        primal.contains(C::V) == mirror.contains(C::IV);
        if (!ok) {
          return "event " + std::to_string(x) + " changes case under order reversal against '" +
                 m.chains[i].name() + "' and '" + m.chains[j].name() + "'";
        }
      }
    }
  }
  return {};
}

// nullopt when the window is not compatible or the chains do not project.
std::optional<bool> coordinated(const ValuedChain &P, const ValuedChain &Q,
                                const CoordinationWindow &w) {
  try {
    return check_coordinated(P, Q, w);
  } catch (const Error &e) {
    if (e.kind() == ErrorKind::NotCompatible || e.kind() == ErrorKind::MissingProjection) {
      return std::nullopt;
    }
    throw;
  }
}

std::string coordination_symmetry(const Model &m) {
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    for (std::size_t j = i + 1; j < m.chains.size(); ++j) {
      const auto &P = m.chains[i];
      const auto &Q = m.chains[j];
      std::optional<CoordinationWindow> w;
      try {
        w = full_window(P.chain(), Q.chain());
      } catch (const Error &) {
        continue;
      }
      if (coordinated(P, Q, *w) != coordinated(Q, P, w->swapped())) {
        return "coordination of '" + P.name() + "' and '" + Q.name() +
               "' depends on argument order";
      }
    }
  }
  return {};
}

std::string distance_constancy(const Model &m) {
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    for (std::size_t j = 0; j < m.chains.size(); ++j) {
      if (i == j) {
        continue;
      }
      std::vector<Rational> d;
      try {
        d = all_chain_distances(m.chains[i], m.chains[j]);
      } catch (const Error &e) {
        if (e.kind() != ErrorKind::NotCoordinated) {
          throw;
        }
        continue;
      }
      for (const auto &v : d) {
        if (v != d.front()) {
          return "distance from '" + m.chains[i].name() + "' to '" + m.chains[j].name() +
                 "' takes the values " + to_string(d.front()) + " and " + to_string(v);
        }
      }
    }
  }
  return {};
}

struct Placement {
  EventId event;
  ChainCoordinates coords;
  Betweenness side;
};

// Events properly collinear with (P, Q) and their coordinates on P.
std::vector<Placement> collinear_events(const Model &m, const ValuedChain &P,
                                        const ValuedChain &Q) {
  std::vector<Placement> out;
  for (std::size_t x = 0; x < m.poset->size(); ++x) {
    const EventId e(x);
    auto c = try_quantify_event(e, P);
    if (!c || !projects_both_ways(e, Q.chain())) {
      continue;
    }
    const Betweenness side = betweenness(e, P.chain(), Q.chain());
    if (side != Betweenness::None) {
      out.push_back({e, *c, side});
    }
  }
  return out;
}

// Signs of the one-chain pair for [a, b], without building it.
std::pair<int, int> pair_signs(const Placement &a, const Placement &b) {
  const auto cmp = [](const Rational &x, const Rational &y) { return x < y ? -1 : (y < x ? 1 : 0); };
  const bool straddle = (a.side == Betweenness::PSide) != (b.side == Betweenness::PSide);
  if (straddle) {
    return {cmp(b.coords.forward, a.coords.backward), cmp(b.coords.backward, a.coords.forward)};
  }
  return {cmp(b.coords.forward, a.coords.forward), cmp(b.coords.backward, a.coords.backward)};
}

// S and P relate linearly in both directions over at least two steps.
bool linearly_related(const ValuedChain &S, const ValuedChain &P) {
  for (const auto *from : {&S, &P}) {
    const ValuedChain &onto = from == &S ? P : S;
    const auto range = quantifiable_range(from->chain(), onto.chain());
    if (!range || range->count() < 3) {
      return false;
    }
    try {
      detect_linear_relation(from->slice(range->lo, range->hi), onto);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::NotLinearlyRelated) {
        throw;
      }
      return false;
    }
  }
  return true;
}

std::string sign_preservation(const Model &m) {
  const std::size_t n = m.poset->size();
  // 1 chain-like, 2 antichain-like, per ordered interval.
  std::vector<std::uint8_t> seen(n * n, 0);
  std::vector<std::string> source(n * n);
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    for (std::size_t j = 0; j < m.chains.size(); ++j) {
      if (i == j || !linearly_related(m.chains[i], m.chains[j])) {
        continue;
      }
      const auto events = collinear_events(m, m.chains[i], m.chains[j]);
      for (const auto &a : events) {
        for (const auto &b : events) {
          const auto [s1, s2] = pair_signs(a, b);
          const int product = s1 * s2;
          if (product == 0) {
            continue;
          }
          const std::uint8_t kind = product > 0 ? 1 : 2;
          const std::size_t slot = a.event.index * n + b.event.index;
          if (seen[slot] == 0) {
            seen[slot] = kind;
            source[slot] = m.chains[i].name() + "|" + m.chains[j].name();
          } else if (seen[slot] != kind) {
            return "interval " + describe(a.event, b.event) + " is " +
                   (seen[slot] == 1 ? "chain-like" : "antichain-like") + " against " +
                   source[slot] + " but not against " + m.chains[i].name() + "|" +
                   m.chains[j].name();
          }
        }
      }
    }
  }
  return {};
}

std::string scalar_invariance(const Model &m) {
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    for (std::size_t j = i + 1; j < m.chains.size(); ++j) {
      const auto &P = m.chains[i];
      const auto &S = m.chains[j];
      if (!linearly_related(S, P)) {
        continue;
      }
      // Events properly collinear with the pair, quantified by each chain.
      const auto on_p = collinear_events(m, P, S);
      const auto on_s = collinear_events(m, S, P);
      std::vector<std::optional<Placement>> by_event(m.poset->size());
      for (const auto &e : on_s) {
        by_event[e.event.index] = e;
      }
      std::vector<std::pair<Placement, Placement>> both;
      for (const auto &e : on_p) {
        if (by_event[e.event.index]) {
          both.emplace_back(e, *by_event[e.event.index]);
        }
      }
      for (const auto &[pa, sa] : both) {
        for (const auto &[pb, sb] : both) {
          const auto x =
              interval_scalar(interval_pair_one_chain(pa.coords, pa.side, pb.coords, pb.side, {}))
                  .value;
          const auto y =
              interval_scalar(interval_pair_one_chain(sa.coords, sa.side, sb.coords, sb.side, {}))
                  .value;
          if (x != y) {
            return "interval " + describe(pa.event, pb.event) + " has scalar " + to_string(x) +
                   " on '" + P.name() + "' but " + to_string(y) + " on '" + S.name() + "'";
          }
        }
      }
    }
  }
  return {};
}

std::string text_round_trip(const Model &m) {
  const Model back = parse_model(write_model(m));
  if (!back.poset->same_closure(*m.poset)) {
    return "closure changed after writing and reading back";
  }
  if (back.chains.size() != m.chains.size() || back.labels != m.labels) {
    return "chains or labels changed after writing and reading back";
  }
  for (std::size_t i = 0; i < m.chains.size(); ++i) {
    const auto &a = m.chains[i];
    const auto &b = back.chains[i];
    if (a.name() != b.name() ||
        !std::equal(a.chain().elements().begin(), a.chain().elements().end(),
                    b.chain().elements().begin(), b.chain().elements().end()) ||
        !std::equal(a.values().begin(), a.values().end(), b.values().begin(), b.values().end())) {
      return "chain '" + a.name() + "' changed after writing and reading back";
    }
  }
  return {};
}

const std::vector<std::pair<std::string, Check>> &checks() {
  static const std::vector<std::pair<std::string, Check>> all = {
      {"closure-duality", closure_duality},
      {"projection-oracle", projection_oracle},
      {"length-additivity", length_additivity},
      {"case-duality", case_duality},
      {"coordination-symmetry", coordination_symmetry},
      {"distance-constancy", distance_constancy},
      {"sign-preservation", sign_preservation},
      {"scalar-invariance", scalar_invariance},
      {"text-round-trip", text_round_trip},
  };
  return all;
}

} // namespace

std::vector<std::string> verification_check_names() {
  std::vector<std::string> out;
  for (const auto &c : checks()) {
    out.push_back(c.first);
  }
  return out;
}

std::vector<CheckResult> run_verification(const Model &model) {
  std::vector<std::future<CheckResult>> running;
  for (const auto &c : checks()) {
    running.push_back(std::async(std::launch::async, [&model, &c] {
      const auto start = std::chrono::steady_clock::now();
      std::string detail;
      try {
        detail = c.second(model);
      } catch (const Error &e) {
        detail = std::string("unexpected error: ") + e.what();
      }
      const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
      return CheckResult{c.first, detail.empty(), std::move(detail), took.count()};
    }));
  }
  std::vector<CheckResult> out;
  for (auto &r : running) {
    out.push_back(r.get());
  }
  return out;
}

} // namespace posetq
