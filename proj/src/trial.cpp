#include "pfunc/trial.hpp"

#include <algorithm>
#include <numeric>

#include "pfunc/error.hpp"

namespace pfunc {

Trial::Trial(std::vector<OutcomeProb> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) {
    raise(errc::empty_space, "a trial needs at least one outcome");
  }
  Rational sum;
  for (const auto& [id, p] : outcomes_) {
    if (id.empty()) {
      raise(errc::parse_error, "outcome ids must be non-empty");
    }
    if (p.sign() <= 0) {
      raise(errc::non_positive_probability,
            "outcome \"" + id + "\" has probability " + p.str() +
                "; every outcome must have positive probability");
    }
    if (!index_.emplace(id, p).second) {
      raise(errc::duplicate_outcome_id, "duplicate outcome id \"" + id + "\"");
    }
    omega_.insert(id);
    sum += p;
  }
  if (sum != Rational(1)) {
    raise(errc::probability_sum_not_one,
          "probabilities sum to " + sum.str() + ", not 1");
  }
}

const Rational& Trial::probability(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    raise(errc::unknown_outcome, "unknown outcome \"" + id + "\"");
  }
  return it->second;
}

AggregatedTrial::AggregatedTrial(std::vector<AggregatedClass> classes)
    : classes_(std::move(classes)) {
  if (classes_.empty()) {
    raise(errc::empty_space, "an aggregated trial needs at least one class");
  }
  std::set<std::string> seen;
  Rational sum;
  for (const auto& c : classes_) {
    if (c.id.empty()) {
      raise(errc::parse_error, "class ids must be non-empty");
    }
    if (!seen.insert(c.id).second) {
      raise(errc::duplicate_outcome_id, "duplicate class id \"" + c.id + "\"");
    }
    if (c.size < 1) {
      raise(errc::out_of_range,
            "class \"" + c.id + "\" has size " + c.size.str() +
                "; sizes must be at least 1");
    }
    if (c.per_element_probability.sign() <= 0) {
      raise(errc::non_positive_probability,
            "class \"" + c.id + "\" has per-element probability " +
                c.per_element_probability.str() + "; must be positive");
    }
    sum += Rational(c.size) * c.per_element_probability;
  }
  if (sum != Rational(1)) {
    raise(errc::probability_sum_not_one,
          "class masses sum to " + sum.str() + ", not 1");
  }
}

Integer AggregatedTrial::total_outcomes() const {
  Integer total = 0;
  for (const auto& c : classes_) total += c.size;
  return total;
}

Trial AggregatedTrial::class_view() const {
  std::vector<OutcomeProb> outcomes;
  outcomes.reserve(classes_.size());
  for (const auto& c : classes_) {
    outcomes.push_back({c.id, Rational(c.size) * c.per_element_probability});
  }
  return Trial(std::move(outcomes));
}

Rational event_probability(const Trial& trial, const Event& event) {
  Rational sum;
  for (const auto& id : event) {
    if (!trial.contains(id)) {
      raise(errc::unknown_member,
            "event member \"" + id + "\" is not an outcome of the trial");
    }
    sum += trial.probability(id);
  }
  return sum;
}

Rational event_probability(const AggregatedTrial& trial, const Event& event) {
  Rational sum;
  for (const auto& id : event) {
    auto it = std::find_if(trial.classes().begin(), trial.classes().end(),
                           [&](const AggregatedClass& c) { return c.id == id; });
    if (it == trial.classes().end()) {
      raise(errc::unknown_member,
            "event member \"" + id + "\" is not a class of the trial");
    }
    sum += Rational(it->size) * it->per_element_probability;
  }
  return sum;
}

std::vector<std::vector<Event>> rank_events_by_impugning_power(
    const Trial& trial, const std::vector<Event>& events) {
  for (const auto& e : events) {
    if (e.empty()) {
      raise(errc::empty_event_in_input,
            "the empty event cannot be ranked: it does not occur");
    }
  }
  std::vector<std::pair<Rational, std::size_t>> keyed;
  keyed.reserve(events.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    keyed.emplace_back(event_probability(trial, events[i]), i);
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<std::vector<Event>> groups;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      groups.emplace_back();
    }
    groups.back().push_back(events[keyed[i].second]);
  }
  return groups;
}

Trial expand_aggregated(const AggregatedTrial& aggregated,
                        const Integer& limit) {
  Integer total = aggregated.total_outcomes();
  if (total > limit) {
    raise(errc::too_large_to_expand,
          "aggregated trial has " + total.str() +
              " outcomes, above the expansion limit " + limit.str());
  }
  std::vector<OutcomeProb> outcomes;
  outcomes.reserve(static_cast<std::size_t>(total));
  for (const auto& c : aggregated.classes()) {
    for (Integer k = 0; k < c.size; ++k) {
      outcomes.push_back({c.id + "#" + k.str(), c.per_element_probability});
    }
  }
  return Trial(std::move(outcomes));
}

}  // namespace pfunc
