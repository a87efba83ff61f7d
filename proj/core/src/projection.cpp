#include <posetq/error.hpp>
#include <posetq/projection.hpp>

#include <sstream>

namespace posetq {

std::optional<std::size_t> forward_index(const Chain &chain, EventId x) {
  const Poset &poset = chain.poset();
  poset.check(x);
  std::size_t lo = 0;
  std::size_t hi = chain.size();
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (poset.leq(x, chain[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (lo == chain.size()) {
    return std::nullopt;
  }
  return lo;
}

std::optional<std::size_t> backward_index(const Chain &chain, EventId x) {
  const Poset &poset = chain.poset();
  poset.check(x);
  std::size_t lo = 0;
  std::size_t hi = chain.size();
  // First index whose element is not included by x.
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (poset.leq(chain[mid], x)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo == 0) {
    return std::nullopt;
  }
  return lo - 1;
}

std::optional<EventId> forward_project(EventId x, const Chain &chain) {
  if (auto i = forward_index(chain, x)) {
    return chain[*i];
  }
  return std::nullopt;
}

std::optional<EventId> backward_project(EventId x, const Chain &chain) {
  if (auto i = backward_index(chain, x)) {
    return chain[*i];
  }
  return std::nullopt;
}

std::string_view to_string(ProjectionCase c) {
  switch (c) {
  case ProjectionCase::A_Incomparable: return "A";
  case ProjectionCase::B_BackwardOnly: return "B";
  case ProjectionCase::C_ForwardOnly: return "C";
  case ProjectionCase::D_Both: return "D";
  }
  return "?";
}

ProjectionOutcome classify_projection(EventId x, const Chain &chain) {
  ProjectionOutcome out;
  out.forward = forward_project(x, chain);
  out.backward = backward_project(x, chain);
  if (out.forward && out.backward) {
    out.kind = ProjectionCase::D_Both;
  } else if (out.forward) {
    out.kind = ProjectionCase::C_ForwardOnly;
  } else if (out.backward) {
    out.kind = ProjectionCase::B_BackwardOnly;
  } else {
    out.kind = ProjectionCase::A_Incomparable;
  }
  return out;
}

std::optional<ChainCoordinates> try_quantify_event(EventId x, const ValuedChain &chain) {
  auto f = forward_index(chain.chain(), x);
  auto b = backward_index(chain.chain(), x);
  if (!f || !b) {
    return std::nullopt;
  }
  return ChainCoordinates{chain.value(*f), chain.value(*b)};
}

ChainCoordinates quantify_event(EventId x, const ValuedChain &chain) {
  auto coords = try_quantify_event(x, chain);
  if (!coords) {
    std::ostringstream oss;
    oss << "event " << x << " is case " << to_string(classify_projection(x, chain.chain()).kind)
        << " relative to chain '" << chain.name() << "'";
    raise(ErrorKind::NotQuantifiable, oss.str());
  }
  return *coords;
}

std::string format_projection_pair(EventId x, const ValuedChain &chain) {
  auto f = forward_index(chain.chain(), x);
  auto b = backward_index(chain.chain(), x);
  std::string out = "(";
  out += f ? to_string(chain.value(*f)) : ".";
  out += ",";
  out += b ? to_string(chain.value(*b)) : ".";
  out += ")";
  return out;
}

} // namespace posetq
