#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <span>
#include <vector>

namespace posetq {

/// Dense event index, 0..N-1 within one poset.
struct EventId {
  std::size_t index = 0;

  constexpr EventId() = default;
  constexpr explicit EventId(std::size_t i) : index(i) {}

  friend constexpr auto operator<=>(EventId, EventId) = default;
};

inline std::ostream &operator<<(std::ostream &os, EventId id) { return os << id.index; }

/// `lower` influences `upper`, i.e. lower <= upper.
struct Relation {
  EventId lower;
  EventId upper;

  friend constexpr bool operator==(const Relation &, const Relation &) = default;
};

enum class Comparability { Less, Equal, Greater, Incomparable };

/// A finite partial order over events, frozen at construction.
///
/// The reflexive-transitive closure is held as one bitset row per event
/// (row x has bit y set iff x <= y), so leq() is a single word probe.
/// The cover relation (transitive reduction) is computed once at build
/// time. A built Poset is immutable and may be shared across threads.
class Poset {
public:
  static constexpr std::size_t default_capacity = 4096;

  /// Throws CycleDetected (message names a witness cycle), InvalidId, or
  /// CapacityExceeded when event_count > capacity. Redundant and
  /// reflexive relations are accepted.
  static Poset build(std::size_t event_count, std::span<const Relation> relations,
                     std::size_t capacity = default_capacity);

  std::size_t size() const noexcept { return size_; }

  bool leq(EventId x, EventId y) const;
  bool less(EventId x, EventId y) const { return x != y && leq(x, y); }
  Comparability compare(EventId x, EventId y) const;

  /// Transitive reduction, sorted by (lower, upper).
  const std::vector<Relation> &cover_edges() const noexcept { return covers_; }

  /// All events y with x < y.
  std::vector<EventId> strictly_above(EventId x) const;

  /// Same events with the order reversed.
  Poset dual() const;

  bool same_closure(const Poset &other) const;

  /// Throws InvalidId when x is not an event of this poset.
  void check(EventId x) const;

private:
  Poset() = default;

  bool bit(std::size_t row, std::size_t col) const noexcept {
    return (up_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }

  std::size_t size_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> up_;
  std::vector<Relation> covers_;
};

using PosetPtr = std::shared_ptr<const Poset>;

inline PosetPtr share(Poset poset) { return std::make_shared<const Poset>(std::move(poset)); }

} // namespace posetq

template <> struct std::hash<posetq::EventId> {
  std::size_t operator()(posetq::EventId id) const noexcept {
    return std::hash<std::size_t>{}(id.index);
  }
};
