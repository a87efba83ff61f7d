#include <posetq/error.hpp>
#include <posetq/poset.hpp>

#include <algorithm>
#include <sstream>

namespace posetq {

namespace {

// Walks predecessor links inside the set of nodes Kahn's algorithm could not
// schedule. Every such node has a predecessor in the set, so the walk must
// revisit a node; the revisited stretch is a cycle.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>> &preds,
                                    const std::vector<std::size_t> &indegree) {
  const std::size_t n = preds.size();
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] > 0) {
      start = i;
      break;
    }
  }
  std::vector<std::size_t> seen_at(n, n);
  std::vector<std::size_t> walk;
  std::size_t cur = start;
  while (seen_at[cur] == n) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    for (auto p : preds[cur]) {
      if (indegree[p] > 0) {
        cur = p;
        break;
      }
    }
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]),
                                 walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

} // namespace

Poset Poset::build(std::size_t event_count, std::span<const Relation> relations,
                   std::size_t capacity) {
  if (event_count > capacity) {
    std::ostringstream oss;
    oss << event_count << " events exceeds the configured capacity of " << capacity;
    raise(ErrorKind::CapacityExceeded, oss.str());
  }
  std::vector<std::vector<std::size_t>> succ(event_count);
  std::vector<std::vector<std::size_t>> preds(event_count);
  for (const auto &r : relations) {
    if (r.lower.index >= event_count || r.upper.index >= event_count) {
      std::ostringstream oss;
      oss << "relation (" << r.lower << ", " << r.upper << ") with only " << event_count
          << " events";
      raise(ErrorKind::InvalidId, oss.str());
    }
    if (r.lower == r.upper) {
      continue;
    }
    succ[r.lower.index].push_back(r.upper.index);
    preds[r.upper.index].push_back(r.lower.index);
  }
  for (auto &s : succ) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }

  std::vector<std::size_t> indegree(event_count, 0);
  for (const auto &s : succ) {
    for (auto y : s) {
      ++indegree[y];
    }
  }
  std::vector<std::size_t> order;
  order.reserve(event_count);
  for (std::size_t i = 0; i < event_count; ++i) {
    if (indegree[i] == 0) {
      order.push_back(i);
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto y : succ[order[head]]) {
      if (--indegree[y] == 0) {
        order.push_back(y);
      }
    }
  }
  if (order.size() != event_count) {
    auto cycle = find_cycle(preds, indegree);
    std::ostringstream oss;
    oss << "cycle";
    for (auto c : cycle) {
      oss << ' ' << c << " <";
    }
    oss << ' ' << cycle.front();
    raise(ErrorKind::CycleDetected, oss.str());
  }

  Poset p;
  p.size_ = event_count;
  p.words_ = (event_count + 63) / 64;
  p.up_.assign(event_count * p.words_, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    std::uint64_t *row = &p.up_[x * p.words_];
    row[x / 64] |= std::uint64_t{1} << (x % 64);
    for (auto y : succ[x]) {
      const std::uint64_t *other = &p.up_[y * p.words_];
      for (std::size_t w = 0; w < p.words_; ++w) {
        row[w] |= other[w];
      }
    }
  }

  // A direct edge x->z is a cover iff z is not strictly above any direct
  // successor of x.
  std::vector<std::uint64_t> implied(p.words_);
  for (std::size_t x = 0; x < event_count; ++x) {
    std::fill(implied.begin(), implied.end(), 0);
    for (auto z : succ[x]) {
      const std::uint64_t *other = &p.up_[z * p.words_];
      for (std::size_t w = 0; w < p.words_; ++w) {
        std::uint64_t bits = other[w];
        if (w == z / 64) {
          bits &= ~(std::uint64_t{1} << (z % 64));
        }
        implied[w] |= bits;
      }
    }
    for (auto z : succ[x]) {
      if (((implied[z / 64] >> (z % 64)) & 1U) == 0) {
        p.covers_.push_back({EventId(x), EventId(z)});
      }
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end(), [](const Relation &a, const Relation &b) {
    return std::pair(a.lower, a.upper) < std::pair(b.lower, b.upper);
  });
  return p;
}

void Poset::check(EventId x) const {
  if (x.index >= size_) {
    std::ostringstream oss;
    oss << "event " << x << " out of range for poset of " << size_ << " events";
    raise(ErrorKind::InvalidId, oss.str());
  }
}

bool Poset::leq(EventId x, EventId y) const {
  check(x);
  check(y);
  return bit(x.index, y.index);
}

Comparability Poset::compare(EventId x, EventId y) const {
  const bool up = leq(x, y);
  const bool down = leq(y, x);
  if (up && down) {
    return Comparability::Equal;
  }
  if (up) {
    return Comparability::Less;
  }
  if (down) {
    return Comparability::Greater;
  }
  return Comparability::Incomparable;
}

std::vector<EventId> Poset::strictly_above(EventId x) const {
  check(x);
  std::vector<EventId> out;
  for (std::size_t y = 0; y < size_; ++y) {
    if (y != x.index && bit(x.index, y)) {
      out.emplace_back(y);
    }
  }
  return out;
}

Poset Poset::dual() const {
  std::vector<Relation> reversed;
  reversed.reserve(covers_.size());
  for (const auto &r : covers_) {
    reversed.push_back({r.upper, r.lower});
  }
  return build(size_, reversed, std::max(size_, default_capacity));
}

bool Poset::same_closure(const Poset &other) const {
  return size_ == other.size_ && up_ == other.up_;
}

} // namespace posetq
