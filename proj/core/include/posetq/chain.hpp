#pragma once

#include <posetq/poset.hpp>
#include <posetq/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace posetq {

/// Totally ordered, non-empty subset of a poset listed from least to greatest.
class Chain {
public:
  /// Throws InvalidArgument when empty, InvalidId for foreign ids and
  /// NotAChain unless elements[i] < elements[i+1] for every i.
  Chain(PosetPtr poset, std::vector<EventId> elements);

  const Poset &poset() const noexcept { return *poset_; }
  const PosetPtr &poset_ptr() const noexcept { return poset_; }

  std::span<const EventId> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  EventId operator[](std::size_t i) const { return elements_.at(i); }
  EventId front() const noexcept { return elements_.front(); }
  EventId back() const noexcept { return elements_.back(); }

  std::optional<std::size_t> index_of(EventId x) const;
  bool contains(EventId x) const { return index_of(x).has_value(); }

private:
  PosetPtr poset_;
  std::vector<EventId> elements_;
  std::vector<std::int32_t> position_; // per event, -1 when off-chain
};

/// A chain with an isotonic valuation. Equal successive values are
/// allowed (coarse graining).
class ValuedChain {
public:
  /// Throws InvalidArgument on size mismatch and NotIsotonic when
  /// values decrease anywhere along the chain.
  ValuedChain(std::string name, Chain chain, std::vector<Rational> values);

  const std::string &name() const noexcept { return name_; }
  const Chain &chain() const noexcept { return chain_; }
  const Poset &poset() const noexcept { return chain_.poset(); }
  std::size_t size() const noexcept { return chain_.size(); }
  EventId operator[](std::size_t i) const { return chain_[i]; }

  std::span<const Rational> values() const noexcept { return values_; }
  const Rational &value(std::size_t i) const { return values_.at(i); }
  /// Throws InvalidArgument when x is not on the chain.
  const Rational &value_of(EventId x) const;

  /// Same elements under a different valuation.
  ValuedChain revalued(std::vector<Rational> values) const;
  ValuedChain renamed(std::string name) const;
  /// Elements lo..hi inclusive, keeping their values.
  ValuedChain slice(std::size_t lo, std::size_t hi) const;

private:
  std::string name_;
  Chain chain_;
  std::vector<Rational> values_;
};

ValuedChain make_valued_chain(PosetPtr poset, std::vector<EventId> elements,
                              std::vector<Rational> values, std::string name = {});

/// [p_lo, p_hi] along a valued chain, addressed by chain index. Holds a
/// reference to the chain, which must outlive it.
class ClosedInterval {
public:
  /// Throws OutOfRange for bad indices and InvalidArgument when lo > hi.
  ClosedInterval(const ValuedChain &chain, std::size_t lo, std::size_t hi);

  const ValuedChain &chain() const noexcept { return *chain_; }
  std::size_t lo() const noexcept { return lo_; }
  std::size_t hi() const noexcept { return hi_; }
  EventId lower() const { return (*chain_)[lo_]; }
  EventId upper() const { return (*chain_)[hi_]; }
  std::size_t count() const noexcept { return hi_ - lo_ + 1; }

  friend bool operator==(const ClosedInterval &a, const ClosedInterval &b) {
    return a.chain_ == b.chain_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

private:
  const ValuedChain *chain_;
  std::size_t lo_;
  std::size_t hi_;
};

/// d([p_j, p_k]) = v(p_k) - v(p_j).
Rational interval_length(const ClosedInterval &interval);

/// Union of two intervals sharing exactly their meeting element.
/// Throws DifferentChains or NotAdjacent.
ClosedInterval join_closed_intervals(const ClosedInterval &first, const ClosedInterval &second);

} // namespace posetq
