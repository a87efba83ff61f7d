#include <posetq/error.hpp>
#include <posetq/generators.hpp>

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>
#include <sstream>

namespace posetq {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// Integers k with 0 <= start + k·step < limit, as [lo, hi]; step >= 0.
// A zero step admits every k when start is inside, none otherwise.
bool clip(std::int64_t start, std::int64_t step, std::int64_t limit, std::int64_t &lo,
          std::int64_t &hi) {
  if (step == 0) {
    return start >= 0 && start < limit;
  }
  lo = std::max(lo, ceil_div(-start, step));
  hi = std::min(hi, floor_div(limit - 1 - start, step));
  return true;
}

} // namespace

const ValuedChain &Model::chain(std::string_view name) const {
  for (const auto &c : chains) {
    if (c.name() == name) {
      return c;
    }
  }
  raise(ErrorKind::InvalidArgument, "no chain named '" + std::string(name) + "'");
}

EventId Model::event(std::string_view label_or_id) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label_or_id) {
      return EventId(i);
    }
  }
  std::size_t id = 0;
  const char *end = label_or_id.data() + label_or_id.size();
  auto [ptr, ec] = std::from_chars(label_or_id.data(), end, id);
  if (ec != std::errc() || ptr != end || id >= poset->size()) {
    raise(ErrorKind::InvalidArgument, "no event '" + std::string(label_or_id) + "'");
  }
  return EventId(id);
}

LatticeChainSpec rest_chain(std::string name, std::int64_t position) {
  return {std::move(name), 1, 1, position, -position, std::nullopt};
}

LatticeChainSpec boosted_chain(std::string name, std::int64_t du, std::int64_t dv,
                               std::int64_t u0, std::int64_t v0) {
  return {std::move(name), du, dv, u0, v0, std::nullopt};
}

EventId lattice_event(const LatticeSpec &spec, std::int64_t u, std::int64_t v) {
  if (u < 0 || v < 0 || u >= spec.u_max || v >= spec.v_max) {
    std::ostringstream oss;
    oss << "(" << u << "," << v << ") is outside the " << spec.u_max << "x" << spec.v_max
        << " window";
    raise(ErrorKind::OutOfRange, oss.str());
  }
  return EventId(static_cast<std::size_t>(u * spec.v_max + v));
}

Model generate_lattice(const LatticeSpec &spec) {
  if (spec.u_max <= 0 || spec.v_max <= 0) {
    raise(ErrorKind::EmptyWindow, "lattice window must be at least 1x1");
  }
  const std::size_t n = static_cast<std::size_t>(spec.u_max * spec.v_max);
  if (n > Poset::default_capacity) {
    std::ostringstream oss;
    oss << n << " lattice events exceeds the capacity of " << Poset::default_capacity;
    raise(ErrorKind::CapacityExceeded, oss.str());
  }
  std::vector<Relation> relations;
  Model model;
  model.labels.resize(n);
  for (std::int64_t u = 0; u < spec.u_max; ++u) {
    for (std::int64_t v = 0; v < spec.v_max; ++v) {
      const EventId e = lattice_event(spec, u, v);
      model.labels[e.index] = std::to_string(u) + "," + std::to_string(v);
      if (u + 1 < spec.u_max) {
        relations.push_back({e, lattice_event(spec, u + 1, v)});
      }
      if (v + 1 < spec.v_max) {
        relations.push_back({e, lattice_event(spec, u, v + 1)});
      }
    }
  }
  model.poset = share(Poset::build(n, relations));

  for (const auto &c : spec.chains) {
    if (c.du < 0 || c.dv < 0 || (c.du == 0 && c.dv == 0)) {
      raise(ErrorKind::InvalidArgument, "chain '" + c.name + "' needs non-negative steps, not both zero");
    }
    Rational step;
    if (c.value_step) {
      step = *c.value_step;
    } else if (auto root = exact_sqrt(Rational(c.du * c.dv))) {
      step = *root;
    } else {
      raise(ErrorKind::InvalidArgument,
            "chain '" + c.name + "' needs an explicit value step: du*dv is not a square");
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::min() / 4;
    std::int64_t hi = std::numeric_limits<std::int64_t>::max() / 4;
    const bool inside = clip(c.u0, c.du, spec.u_max, lo, hi) && clip(c.v0, c.dv, spec.v_max, lo, hi);
    if (!inside || lo > hi) {
      raise(ErrorKind::ChainEscapesWindow, "chain '" + c.name + "' has no element in the window");
    }
    std::vector<EventId> elements;
    std::vector<Rational> values;
    for (std::int64_t k = lo; k <= hi; ++k) {
      elements.push_back(lattice_event(spec, c.u0 + k * c.du, c.v0 + k * c.dv));
      values.push_back(step * k);
    }
    model.chains.push_back(make_valued_chain(model.poset, std::move(elements), std::move(values), c.name));
  }
  return model;
}

Model generate_simplex(std::size_t n) {
  if (n < 1) {
    raise(ErrorKind::InvalidArgument, "simplex needs at least one chain");
  }
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      relations.push_back({EventId(j), EventId(n + i)});
    }
  }
  Model model;
  model.poset = share(Poset::build(2 * n, relations));
  for (std::size_t i = 0; i < n; ++i) {
    model.labels.push_back("x" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    model.labels.push_back("y" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    model.chains.push_back(make_valued_chain(model.poset, {EventId(i), EventId(n + i)},
                                             {Rational(0), Rational(1)},
                                             "C" + std::to_string(i + 1)));
  }
  return model;
}

Model generate_random(std::uint64_t seed, std::size_t events, double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    raise(ErrorKind::InvalidArgument, "edge density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // Portable uniform draw in [0, 1) from the top 53 bits.
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < events; ++i) {
    for (std::size_t j = i + 1; j < events; ++j) {
      if (uniform() < density) {
        edges.emplace_back(i, j);
      }
    }
  }
  std::vector<std::size_t> perm(events);
  for (std::size_t i = 0; i < events; ++i) {
    perm[i] = i;
  }
  for (std::size_t i = events; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng() % i]);
  }
  std::vector<Relation> relations;
  relations.reserve(edges.size());
  for (auto [i, j] : edges) {
    relations.push_back({EventId(perm[i]), EventId(perm[j])});
  }
  Model model;
  model.poset = share(Poset::build(events, relations));
  for (std::size_t i = 0; i < events; ++i) {
    model.labels.push_back(std::to_string(i));
  }
  return model;
}

void add_greedy_chains(Model &model, std::size_t count) {
  const Poset &poset = *model.poset;
  const std::size_t n = poset.size();
  // Larger up-sets come first in every linear extension.
  std::vector<std::size_t> up(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = poset.strictly_above(EventId(i)).size();
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return up[a] > up[b]; });
  std::vector<bool> used(n, false);
  for (std::size_t made = 0; made < count; ++made) {
    std::vector<std::size_t> length(n, 0);
    std::vector<std::size_t> next(n, n);
    std::size_t best = n;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const std::size_t x = *it;
      if (used[x]) {
        continue;
      }
      length[x] = 1;
      for (EventId y : poset.strictly_above(EventId(x))) {
        if (!used[y.index] && length[y.index] + 1 > length[x]) {
          length[x] = length[y.index] + 1;
          next[x] = y.index;
        }
      }
      if (best == n || length[x] > length[best]) {
        best = x;
      }
    }
    if (best == n || length[best] < 2) {
      return;
    }
    std::vector<EventId> elements;
    std::vector<Rational> values;
    for (std::size_t x = best; x != n; x = next[x]) {
      used[x] = true;
      values.emplace_back(static_cast<std::int64_t>(elements.size()));
      elements.emplace_back(x);
    }
    model.chains.push_back(make_valued_chain(model.poset, std::move(elements), std::move(values),
                                             "G" + std::to_string(made + 1)));
  }
}

Model generate_embedding(const EmbeddingSpec &spec) {
  if (spec.t_max < 0) {
    raise(ErrorKind::EmptyWindow, "embedding needs t_max >= 0");
  }
  struct Coord {
    std::int64_t t, x, y;
  };
  std::vector<Coord> coords;
  Model model;
  for (const auto &c : spec.chains) {
    for (std::int64_t t = 0; t <= spec.t_max; ++t) {
      coords.push_back({t, c.x, c.y});
      model.labels.push_back(c.name + "@" + std::to_string(t));
    }
  }
  for (const auto &p : spec.points) {
    coords.push_back({p.t, p.x, p.y});
    model.labels.push_back(p.name);
  }
  const std::size_t n = coords.size();
  std::vector<Relation> relations;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t dt = coords[j].t - coords[i].t;
      const std::int64_t dx = coords[j].x - coords[i].x;
      const std::int64_t dy = coords[j].y - coords[i].y;
      if (i != j && dt >= 0 && dt * dt >= dx * dx + dy * dy) {
        relations.push_back({EventId(i), EventId(j)});
      }
    }
  }
  model.poset = share(Poset::build(n, relations));
  const std::size_t ticks = static_cast<std::size_t>(spec.t_max + 1);
  for (std::size_t c = 0; c < spec.chains.size(); ++c) {
    std::vector<EventId> elements;
    std::vector<Rational> values;
    for (std::size_t t = 0; t < ticks; ++t) {
      elements.emplace_back(c * ticks + t);
      values.push_back(Rational(static_cast<std::int64_t>(t)) * spec.value_scale);
    }
    model.chains.push_back(
        make_valued_chain(model.poset, std::move(elements), std::move(values), spec.chains[c].name));
  }
  return model;
}

EmbeddingSpec plane_configuration() {
  EmbeddingSpec spec;
  spec.t_max = 50;
  spec.value_scale = Rational(1, 5);
  for (std::int64_t x : {0, 4, 14, 18, 25}) {
    spec.chains.push_back({"C" + std::to_string(x), x, 0});
  }
  spec.points = {{"x", 25, 9, 12}, {"x_plane", 25, 9, 0}, {"y", 25, 20, 0}, {"a", 25, 10, 0}};
  return spec;
}

LatticeSpec standard_lattice(std::int64_t u_max, std::int64_t v_max) {
  LatticeSpec spec{u_max, v_max, {}};
  for (auto c : {rest_chain("R0", 0), rest_chain("R2", 2), rest_chain("R4", 4),
                 boosted_chain("B", 4, 1)}) {
    LatticeSpec probe{u_max, v_max, {c}};
    try {
      generate_lattice(probe);
      spec.chains.push_back(c);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::ChainEscapesWindow) {
        throw;
      }
    }
  }
  return spec;
}

namespace {

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.emplace_back(text.substr(start, end - start));
    if (end == std::string_view::npos) {
      return out;
    }
    start = end + 1;
  }
}

template <typename T> T parse_number(const std::string &word, std::string_view spec) {
  T value{};
  const char *end = word.data() + word.size();
  auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    raise(ErrorKind::InvalidArgument, "bad number '" + word + "' in generator '" +
                                          std::string(spec) + "'");
  }
  return value;
}

} // namespace

Model generate_named(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view kind = spec.substr(0, colon);
  const auto args =
      colon == std::string_view::npos ? std::vector<std::string>{} : split_on(spec.substr(colon + 1), ',');
  if (kind == "lattice" && args.size() == 2) {
    return generate_lattice(standard_lattice(parse_number<std::int64_t>(args[0], spec),
                                             parse_number<std::int64_t>(args[1], spec)));
  }
  if (kind == "simplex" && args.size() == 1) {
    return generate_simplex(parse_number<std::size_t>(args[0], spec));
  }
  if (kind == "random" && args.size() == 3) {
    Model m = generate_random(parse_number<std::uint64_t>(args[0], spec),
                              parse_number<std::size_t>(args[1], spec),
                              parse_number<double>(args[2], spec));
    add_greedy_chains(m, 3);
    return m;
  }
  if (kind == "plane" && args.empty()) {
    return generate_embedding(plane_configuration());
  }
  raise(ErrorKind::InvalidArgument,
        "unknown generator '" + std::string(spec) +
            "'; expected lattice:U,V, simplex:N, random:SEED,N,D or plane");
}

std::vector<std::string> builtin_generator_specs() {
  std::vector<std::string> out = {"lattice:1,1", "lattice:8,8", "lattice:10,10", "lattice:16,16"};
  for (int n = 1; n <= 8; ++n) {
    out.push_back("simplex:" + std::to_string(n));
  }
  for (int seed = 1; seed <= 5; ++seed) {
    out.push_back("random:" + std::to_string(seed) + ",48,0.08");
  }
  out.push_back("random:6,32,0");
  out.push_back("random:7,32,1");
  out.push_back("plane");
  return out;
}

} // namespace posetq
