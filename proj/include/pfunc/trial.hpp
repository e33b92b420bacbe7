#ifndef PFUNC_TRIAL_HPP
#define PFUNC_TRIAL_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfunc/rational.hpp"

namespace pfunc {

/// An event is a set of outcome ids (or class ids over an aggregated trial).
using Event = std::set<std::string>;

struct OutcomeProb {
  std::string id;
  Rational p;
};

/// Finite discrete probability space. Construction enforces: a non-empty
/// outcome set, unique non-empty ids, every probability strictly positive,
/// and probabilities summing exactly to 1.
class Trial {
 public:
  explicit Trial(std::vector<OutcomeProb> outcomes);

  const std::vector<OutcomeProb>& outcomes() const { return outcomes_; }
  std::size_t size() const { return outcomes_.size(); }
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Probability of a single outcome; throws UnknownOutcome.
  const Rational& probability(const std::string& id) const;
  const std::set<std::string>& omega() const { return omega_; }

 private:
  std::vector<OutcomeProb> outcomes_;
  std::map<std::string, Rational> index_;
  std::set<std::string> omega_;
};

struct AggregatedClass {
  std::string id;
  Integer size;
  Rational per_element_probability;
};

/// Compressed trial: each class stands for `size` interchangeable outcomes
/// sharing one probability. Exact stand-in for spaces far too large to
/// enumerate (2^42 coin tosses and the like).
class AggregatedTrial {
 public:
  explicit AggregatedTrial(std::vector<AggregatedClass> classes);

  const std::vector<AggregatedClass>& classes() const { return classes_; }
  Integer total_outcomes() const;

  /// The trial over class ids with P(class) = size * per-element probability.
  /// Valid whenever every statistic of interest is constant on each class.
  Trial class_view() const;

 private:
  std::vector<AggregatedClass> classes_;
};

Rational event_probability(const Trial& trial, const Event& event);
/// Aggregated overload: event members are class ids.
Rational event_probability(const AggregatedTrial& trial, const Event& event);

/// Sorts events by strictly decreasing probability (equivalently increasing
/// impugning power). Ties come back as one group, input order preserved
/// inside a group. The empty event is rejected: it cannot occur.
std::vector<std::vector<Event>> rank_events_by_impugning_power(
    const Trial& trial, const std::vector<Event>& events);

/// Explicit trial with one outcome per class element, ids "classid#k".
/// Throws TooLargeToExpand when the total outcome count exceeds `limit`.
Trial expand_aggregated(const AggregatedTrial& aggregated, const Integer& limit);

}  // namespace pfunc

#endif  // PFUNC_TRIAL_HPP
