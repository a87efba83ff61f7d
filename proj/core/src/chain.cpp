#include <posetq/chain.hpp>
#include <posetq/error.hpp>

#include <sstream>

namespace posetq {

Chain::Chain(PosetPtr poset, std::vector<EventId> elements)
    : poset_(std::move(poset)), elements_(std::move(elements)) {
  if (!poset_) {
    raise(ErrorKind::InvalidArgument, "chain requires a poset");
  }
  if (elements_.empty()) {
    raise(ErrorKind::InvalidArgument, "chain must be non-empty");
  }
  position_.assign(poset_->size(), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    poset_->check(elements_[i]);
    if (i > 0 && !poset_->less(elements_[i - 1], elements_[i])) {
      std::ostringstream oss;
      oss << "elements " << elements_[i - 1] << " and " << elements_[i]
          << " are not strictly increasing";
      raise(ErrorKind::NotAChain, oss.str());
    }
    position_[elements_[i].index] = static_cast<std::int32_t>(i);
  }
}

std::optional<std::size_t> Chain::index_of(EventId x) const {
  if (x.index >= position_.size() || position_[x.index] < 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(position_[x.index]);
}

ValuedChain::ValuedChain(std::string name, Chain chain, std::vector<Rational> values)
    : name_(std::move(name)), chain_(std::move(chain)), values_(std::move(values)) {
  if (values_.size() != chain_.size()) {
    std::ostringstream oss;
    oss << "chain '" << name_ << "' has " << chain_.size() << " elements but "
        << values_.size() << " values";
    raise(ErrorKind::InvalidArgument, oss.str());
  }
  for (std::size_t i = 1; i < values_.size(); ++i) {
    if (values_[i] < values_[i - 1]) {
      std::ostringstream oss;
      oss << "chain '" << name_ << "' value " << to_string(values_[i]) << " at " << chain_[i]
          << " is below " << to_string(values_[i - 1]);
      raise(ErrorKind::NotIsotonic, oss.str());
    }
  }
}

const Rational &ValuedChain::value_of(EventId x) const {
  auto i = chain_.index_of(x);
  if (!i) {
    std::ostringstream oss;
    oss << "event " << x << " is not on chain '" << name_ << "'";
    raise(ErrorKind::InvalidArgument, oss.str());
  }
  return values_[*i];
}

ValuedChain ValuedChain::revalued(std::vector<Rational> values) const {
  return ValuedChain(name_, chain_, std::move(values));
}

ValuedChain ValuedChain::renamed(std::string name) const {
  return ValuedChain(std::move(name), chain_, values_);
}

ValuedChain ValuedChain::slice(std::size_t lo, std::size_t hi) const {
  if (lo > hi || hi >= size()) {
    raise(ErrorKind::OutOfRange, "slice outside chain '" + name_ + "'");
  }
  auto all = chain_.elements();
  std::vector<EventId> elements(all.begin() + static_cast<std::ptrdiff_t>(lo),
                                all.begin() + static_cast<std::ptrdiff_t>(hi + 1));
  std::vector<Rational> values(values_.begin() + static_cast<std::ptrdiff_t>(lo),
                               values_.begin() + static_cast<std::ptrdiff_t>(hi + 1));
  return ValuedChain(name_, Chain(chain_.poset_ptr(), std::move(elements)), std::move(values));
}

ValuedChain make_valued_chain(PosetPtr poset, std::vector<EventId> elements,
                              std::vector<Rational> values, std::string name) {
  return ValuedChain(std::move(name), Chain(std::move(poset), std::move(elements)),
                     std::move(values));
}

ClosedInterval::ClosedInterval(const ValuedChain &chain, std::size_t lo, std::size_t hi)
    : chain_(&chain), lo_(lo), hi_(hi) {
  if (lo >= chain.size() || hi >= chain.size()) {
    std::ostringstream oss;
    oss << "interval [" << lo << ", " << hi << "] outside chain '" << chain.name()
        << "' of " << chain.size() << " elements";
    raise(ErrorKind::OutOfRange, oss.str());
  }
  if (lo > hi) {
    raise(ErrorKind::InvalidArgument, "interval lower index exceeds upper index");
  }
}

Rational interval_length(const ClosedInterval &interval) {
  return interval.chain().value(interval.hi()) - interval.chain().value(interval.lo());
}

ClosedInterval join_closed_intervals(const ClosedInterval &first, const ClosedInterval &second) {
  if (&first.chain() != &second.chain()) {
    raise(ErrorKind::DifferentChains, "intervals lie on '" + first.chain().name() + "' and '" +
                                          second.chain().name() + "'");
  }
  if (first.hi() != second.lo()) {
    std::ostringstream oss;
    oss << "intervals [" << first.lo() << ", " << first.hi() << "] and [" << second.lo() << ", "
        << second.hi() << "] do not share exactly one element";
    raise(ErrorKind::NotAdjacent, oss.str());
  }
  return ClosedInterval(first.chain(), first.lo(), second.hi());
}

} // namespace posetq
