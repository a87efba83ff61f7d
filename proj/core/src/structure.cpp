#include <posetq/error.hpp>
#include <posetq/structure.hpp>

#include <bit>
#include <sstream>

namespace posetq {

namespace {

using Opt = std::optional<EventId>;

bool same(const Opt &a, const Opt &b) { return a && b && *a == *b; }

Opt fwd(const Opt &x, const Chain &c) { return x ? forward_project(*x, c) : std::nullopt; }
Opt bwd(const Opt &x, const Chain &c) { return x ? backward_project(*x, c) : std::nullopt; }

void require_projection(EventId x, const Chain &chain, const char *which) {
  if (!forward_index(chain, x) || !backward_index(chain, x)) {
    std::ostringstream oss;
    oss << "event " << x << " does not project both ways onto chain " << which;
    raise(ErrorKind::MissingProjection, oss.str());
  }
}

void check_range(const IndexRange &r, const Chain &chain, const char *what) {
  if (r.lo > r.hi || r.hi >= chain.size()) {
    std::ostringstream oss;
    oss << what << " [" << r.lo << ", " << r.hi << "] outside chain of " << chain.size()
        << " elements";
    raise(ErrorKind::OutOfRange, oss.str());
  }
}

// The projection `project` maps `from` on `source` onto `onto` on `target`
// one-to-one and onto, preserving order.
template <typename Project>
bool bijective(const Chain &source, const IndexRange &from, const Chain &target,
               const IndexRange &onto, Project project) {
  if (from.count() != onto.count()) {
    return false;
  }
  for (std::size_t i = from.lo; i <= from.hi; ++i) {
    auto j = project(target, source[i]);
    if (!j) {
      std::ostringstream oss;
      oss << "element " << source[i] << " has no projection inside the window";
      raise(ErrorKind::MissingProjection, oss.str());
    }
    if (*j != onto.lo + (i - from.lo)) {
      return false;
    }
  }
  return true;
}

template <typename Project>
bool lengths_kept(const ValuedChain &source, const IndexRange &from, const ValuedChain &target,
                  Project project) {
  for (std::size_t i = from.lo; i < from.hi; ++i) {
    const std::size_t j0 = *project(target.chain(), source[i]);
    const std::size_t j1 = *project(target.chain(), source[i + 1]);
    if (source.value(i + 1) - source.value(i) != target.value(j1) - target.value(j0)) {
      return false;
    }
  }
  return true;
}

} // namespace

std::string_view to_string(CollinearityCase c) {
  switch (c) {
  case CollinearityCase::I: return "I";
  case CollinearityCase::II: return "II";
  case CollinearityCase::III: return "III";
  case CollinearityCase::IV: return "IV";
  case CollinearityCase::V: return "V";
  case CollinearityCase::NotCollinear: return "not-collinear";
  }
  return "?";
}

int CaseSet::count() const noexcept { return std::popcount(bits_); }

CaseSet matching_collinearity_cases(EventId x, const Chain &P, const Chain &Q) {
  require_projection(x, P, "P");
  require_projection(x, Q, "Q");
  const Opt px = forward_project(x, P);
  const Opt pbx = backward_project(x, P);
  const Opt qx = forward_project(x, Q);
  const Opt qbx = backward_project(x, Q);

  // Composites, named outer-then-inner: p_qb is P(Q̄x).
  const Opt p_q = fwd(qx, P), pb_q = bwd(qx, P), p_qb = fwd(qbx, P), pb_qb = bwd(qbx, P);
  const Opt q_p = fwd(px, Q), qb_p = bwd(px, Q), q_pb = fwd(pbx, Q), qb_pb = bwd(pbx, Q);

  CaseSet out;
  if (same(px, pb_q) && same(qx, q_p) && same(pbx, p_qb) && same(qbx, qb_pb)) {
    out.insert(CollinearityCase::I);
  }
  if (same(px, p_qb) && same(qx, q_pb) && same(pbx, pb_q) && same(qbx, qb_p)) {
    out.insert(CollinearityCase::II);
  }
  if (same(px, p_q) && same(qx, qb_p) && same(pbx, pb_qb) && same(qbx, q_pb)) {
    out.insert(CollinearityCase::III);
  }
  if (same(px, p_q) && same(qx, qb_p) && same(pbx, p_qb) && same(qbx, qb_pb)) {
    out.insert(CollinearityCase::IV);
  }
  if (same(px, pb_q) && same(qx, q_p) && same(pbx, pb_qb) && same(qbx, q_pb)) {
    out.insert(CollinearityCase::V);
  }
  return out;
}

CollinearityCase collinearity_case(EventId x, const Chain &P, const Chain &Q) {
  const CaseSet cases = matching_collinearity_cases(x, P, Q);
  for (auto c : {CollinearityCase::II, CollinearityCase::I, CollinearityCase::III,
                 CollinearityCase::IV, CollinearityCase::V}) {
    if (cases.contains(c)) {
      return c;
    }
  }
  return CollinearityCase::NotCollinear;
}

bool is_properly_collinear(EventId x, const Chain &P, const Chain &Q) {
  return betweenness(x, P, Q) != Betweenness::None;
}

std::string_view to_string(Betweenness b) {
  switch (b) {
  case Betweenness::PSide: return "x|P|Q";
  case Betweenness::Between: return "P|x|Q";
  case Betweenness::QSide: return "P|Q|x";
  case Betweenness::None: return "none";
  }
  return "?";
}

Betweenness betweenness_of(CollinearityCase c) {
  switch (c) {
  case CollinearityCase::I: return Betweenness::PSide;
  case CollinearityCase::II: return Betweenness::Between;
  case CollinearityCase::III: return Betweenness::QSide;
  default: return Betweenness::None;
  }
}

Betweenness betweenness(EventId x, const Chain &P, const Chain &Q) {
  return betweenness_of(collinearity_case(x, P, Q));
}

bool chain_properly_collinear(const Chain &X, const Chain &P, const Chain &Q) {
  require_projection(X.front(), P, "P");
  require_projection(X.front(), Q, "Q");
  require_projection(X.back(), P, "P");
  require_projection(X.back(), Q, "Q");

  const auto covered = [&](const Chain &target) {
    const std::size_t lo = *backward_index(target, X.front());
    const std::size_t hi = *forward_index(target, X.back());
    std::vector<bool> hit(target.size(), false);
    for (EventId x : X.elements()) {
      hit[*forward_index(target, x)] = true;
      hit[*backward_index(target, x)] = true;
    }
    for (std::size_t i = lo; i <= hi; ++i) {
      if (!hit[i]) {
        return false;
      }
    }
    return true;
  };

  for (EventId x : X.elements()) {
    if (!is_properly_collinear(x, P, Q)) {
      return false;
    }
  }
  return covered(P) && covered(Q);
}

std::string_view to_string(IntervalPlacement p) {
  switch (p) {
  case IntervalPlacement::SameSideP: return "[a,b]|P|Q";
  case IntervalPlacement::Between: return "P|[a,b]|Q";
  case IntervalPlacement::SameSideQ: return "P|Q|[a,b]";
  case IntervalPlacement::A_P_B_Q: return "a|P|b|Q";
  case IntervalPlacement::B_P_A_Q: return "b|P|a|Q";
  case IntervalPlacement::P_A_Q_B: return "P|a|Q|b";
  case IntervalPlacement::P_B_Q_A: return "P|b|Q|a";
  case IntervalPlacement::A_P_Q_B: return "a|P|Q|b";
  case IntervalPlacement::B_P_Q_A: return "b|P|Q|a";
  }
  return "?";
}

IntervalPlacement interval_betweenness(EventId a, EventId b, const Chain &P, const Chain &Q) {
  const Betweenness sa = betweenness(a, P, Q);
  const Betweenness sb = betweenness(b, P, Q);
  if (sa == Betweenness::None || sb == Betweenness::None) {
    std::ostringstream oss;
    oss << "endpoint " << (sa == Betweenness::None ? a : b) << " is not properly collinear";
    raise(ErrorKind::NotProperlyCollinear, oss.str());
  }
  using B = Betweenness;
  using IP = IntervalPlacement;
  if (sa == sb) {
    return sa == B::PSide ? IP::SameSideP : sa == B::Between ? IP::Between : IP::SameSideQ;
  }
  if (sa == B::PSide) {
    return sb == B::Between ? IP::A_P_B_Q : IP::A_P_Q_B;
  }
  if (sa == B::Between) {
    return sb == B::PSide ? IP::B_P_A_Q : IP::P_A_Q_B;
  }
  return sb == B::PSide ? IP::B_P_Q_A : IP::P_B_Q_A;
}

bool chain_between(const Chain &B, const Chain &A, const Chain &C) {
  std::size_t checked = 0;
  for (EventId x : B.elements()) {
    if (!forward_index(A, x) || !backward_index(A, x) || !forward_index(C, x) ||
        !backward_index(C, x)) {
      continue;
    }
    if (collinearity_case(x, A, C) != CollinearityCase::II) {
      return false;
    }
    ++checked;
  }
  return checked > 0;
}

std::array<std::string, 3> induced_chain_order(const ValuedChain &A, const ValuedChain &B,
                                               const ValuedChain &C) {
  if (!chain_between(B.chain(), A.chain(), C.chain())) {
    raise(ErrorKind::NotBetween,
          "chain '" + B.name() + "' is not between '" + A.name() + "' and '" + C.name() + "'");
  }
  return {A.name(), B.name(), C.name()};
}

CoordinationWindow CoordinationWindow::swapped() const {
  return {backward_onto_q, backward_from_p, forward_onto_q, forward_from_p};
}

CoordinationWindow full_window(const Chain &P, const Chain &Q) {
  std::optional<std::size_t> last_forward;
  std::optional<std::size_t> first_backward;
  for (std::size_t i = 0; i < P.size(); ++i) {
    if (forward_index(Q, P[i])) {
      last_forward = i;
    }
    if (!first_backward && backward_index(Q, P[i])) {
      first_backward = i;
    }
  }
  if (!last_forward || !first_backward) {
    raise(ErrorKind::MissingProjection, "chains do not project onto one another");
  }
  CoordinationWindow w;
  w.forward_from_p = {0, *last_forward};
  w.forward_onto_q = {*forward_index(Q, P[0]), *forward_index(Q, P[*last_forward])};
  w.backward_from_p = {*first_backward, P.size() - 1};
  w.backward_onto_q = {*backward_index(Q, P[*first_backward]), *backward_index(Q, P.back())};
  return w;
}

bool check_compatible(const Chain &P, const Chain &Q, const CoordinationWindow &w) {
  check_range(w.forward_from_p, P, "forward source range");
  check_range(w.backward_from_p, P, "backward source range");
  check_range(w.forward_onto_q, Q, "forward image range");
  check_range(w.backward_onto_q, Q, "backward image range");
  return bijective(P, w.forward_from_p, Q, w.forward_onto_q,
                   [](const Chain &c, EventId x) { return forward_index(c, x); }) &&
         bijective(P, w.backward_from_p, Q, w.backward_onto_q,
                   [](const Chain &c, EventId x) { return backward_index(c, x); });
}

bool check_coordinated(const ValuedChain &P, const ValuedChain &Q,
                       const CoordinationWindow &w) {
  if (!check_compatible(P.chain(), Q.chain(), w)) {
    raise(ErrorKind::NotCompatible,
          "chains '" + P.name() + "' and '" + Q.name() + "' are not compatible on this window");
  }
  return lengths_kept(P, w.forward_from_p, Q,
                      [](const Chain &c, EventId x) { return forward_index(c, x); }) &&
         lengths_kept(P, w.backward_from_p, Q,
                      [](const Chain &c, EventId x) { return backward_index(c, x); });
}

LinearRelation LinearRelation::normalized() const {
  if (step == 0) {
    raise(ErrorKind::InvalidArgument, "linear relation with zero step");
  }
  return {m / step, n / step, Rational(1)};
}

LinearRelation detect_linear_relation(const ValuedChain &S, const ValuedChain &P) {
  if (S.size() < 2) {
    raise(ErrorKind::NotLinearlyRelated, "chain '" + S.name() + "' has a single element");
  }
  std::vector<ChainCoordinates> coords;
  coords.reserve(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    auto c = try_quantify_event(S[i], P);
    if (!c) {
      std::ostringstream oss;
      oss << "element " << S[i] << " of '" << S.name() << "' does not project both ways onto '"
          << P.name() << "'";
      raise(ErrorKind::MissingProjection, oss.str());
    }
    coords.push_back(*c);
  }
  LinearRelation rel{coords[1].forward - coords[0].forward,
                     coords[1].backward - coords[0].backward, S.value(1) - S.value(0)};
  for (std::size_t i = 2; i < S.size(); ++i) {
    const LinearRelation next{coords[i].forward - coords[i - 1].forward,
                              coords[i].backward - coords[i - 1].backward,
                              S.value(i) - S.value(i - 1)};
    if (next != rel) {
      std::ostringstream oss;
      oss << "step " << i << " of '" << S.name() << "' projects to (" << to_string(next.m) << ", "
          << to_string(next.n) << ") per " << to_string(next.step) << ", expected ("
          << to_string(rel.m) << ", " << to_string(rel.n) << ") per " << to_string(rel.step);
      raise(ErrorKind::NotLinearlyRelated, oss.str());
    }
  }
  return rel;
}

std::optional<IndexRange> quantifiable_range(const Chain &S, const Chain &P) {
  std::optional<IndexRange> out;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (forward_index(P, S[i]) && backward_index(P, S[i])) {
      if (!out) {
        out = IndexRange{i, i};
      } else {
        out->hi = i;
      }
    }
  }
  return out;
}

} // namespace posetq
