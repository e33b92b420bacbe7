#include "pfunc/p_function.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfunc/error.hpp"

namespace pfunc {

namespace {

// Distinct statistic values ascending, each with the cumulative probability
// of all outcomes at or below it. Requires totality on the trial's omega.
std::vector<std::pair<Rational, Rational>> cumulative_levels(
    const Trial& trial, const TestStatistic& statistic) {
  std::vector<std::pair<Rational, Rational>> levels;
  levels.reserve(trial.size());
  for (const auto& outcome : trial.outcomes()) {
    levels.emplace_back(statistic.at(outcome.id), outcome.p);
  }
  std::sort(levels.begin(), levels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t last = 0;
  for (std::size_t next = 1; next < levels.size(); ++next) {
    if (levels[next].first == levels[last].first) {
      levels[last].second += levels[next].second;
    } else {
      ++last;
      if (last != next) levels[last] = std::move(levels[next]);
    }
  }
  levels.resize(last + 1);
  Rational acc;
  for (auto& [value, mass] : levels) {
    acc += mass;
    mass = acc;
  }
  return levels;
}

// P[f <= eps] without the sign precondition; exact_p_value_from_statistic
// must work for negative statistic values too.
Rational tail_mass(const Trial& trial, const TestStatistic& statistic,
                   const Rational& eps) {
  Rational sum;
  for (const auto& outcome : trial.outcomes()) {
    if (statistic.at(outcome.id) <= eps) sum += outcome.p;
  }
  return sum;
}

// First checkpoint where P[f <= eps] <= eps fails, if any: either eps = 0
// when non-positive values carry mass, or the smallest positive range value
// whose cumulative mass exceeds it.
std::optional<PWitness> first_failing_checkpoint(
    const std::vector<std::pair<Rational, Rational>>& levels) {
  Rational tail_zero;
  for (const auto& [value, cumulative] : levels) {
    if (value.sign() > 0) break;
    tail_zero = cumulative;
  }
  if (tail_zero.sign() > 0) {
    return PWitness{Rational(), tail_zero};
  }
  for (const auto& [value, cumulative] : levels) {
    if (value.sign() > 0 && cumulative > value) {
      return PWitness{value, cumulative};
    }
  }
  return std::nullopt;
}

}  // namespace

Rational tail_probability(const Trial& trial, const TestStatistic& statistic,
                          const Rational& eps) {
  if (eps.sign() < 0) {
    raise(errc::negative_epsilon,
          "tail probability is defined for non-negative epsilon, got " +
              eps.str());
  }
  return tail_mass(trial, statistic, eps);
}

Rational exact_p_value(const Trial& trial, const TestOrder& order,
                       const std::string& outcome) {
  if (!order.contains(outcome)) {
    raise(errc::unknown_outcome, "unknown outcome \"" + outcome + "\"");
  }
  return event_probability(trial, downward_closure(order, outcome));
}

Rational exact_p_value_from_statistic(const Trial& trial,
                                      const TestStatistic& statistic,
                                      const std::string& outcome) {
  if (!trial.contains(outcome)) {
    raise(errc::unknown_outcome, "unknown outcome \"" + outcome + "\"");
  }
  return tail_mass(trial, statistic, statistic.at(outcome));
}

// Deciding "P[f <= eps] <= eps for every eps >= 0" by checking only
// eps = 0 and the non-negative range values is sound and complete here:
// the tail is a right-continuous step function of eps that jumps only at
// range values. For any eps between jumps, the tail equals the tail at the
// largest range value v <= eps; if that checkpoint passed (tail <= v), then
// tail <= v <= eps, so eps passes too. For eps below every checkpoint the
// tail is the mass of negative-valued outcomes, which the eps = 0
// checkpoint covers. Finite omega means finitely many checkpoints.
PFunctionClassification classify_p_function(const Trial& trial,
                                            const TestStatistic& statistic) {
  auto levels = cumulative_levels(trial, statistic);
  if (auto witness = first_failing_checkpoint(levels)) {
    return {PKind::not_p_function, std::move(witness)};
  }
  // A p-function. Exact iff the tail meets eps at every range value; the
  // smallest strict range point witnesses conservativeness. Range values
  // <= 0 cannot occur here: their positive mass would have failed eps = 0.
  for (const auto& [value, cumulative] : levels) {
    if (cumulative != value) {
      return {PKind::conservative_p_function, PWitness{value, cumulative}};
    }
  }
  return {PKind::exact_p_function, std::nullopt};
}

bool is_p_function(const Trial& trial, const TestStatistic& statistic) {
  return !first_failing_checkpoint(cumulative_levels(trial, statistic))
              .has_value();
}

TestStatistic scale_statistic(const TestStatistic& statistic,
                              const Rational& c) {
  if (c.sign() <= 0) {
    raise(errc::non_positive_scale,
          "scale factor must be positive, got " + c.str());
  }
  std::map<std::string, Rational> values;
  for (const auto& [id, value] : statistic.values()) {
    values.emplace(id, c * value);
  }
  return TestStatistic(std::move(values));
}

TestStatistic bonferroni(const Trial& trial,
                         const std::vector<TestStatistic>& statistics) {
  if (statistics.empty()) {
    raise(errc::empty_statistic_list,
          "the Bonferroni correction needs at least one statistic");
  }
  Rational n(static_cast<long long>(statistics.size()));
  // Walk every statistic's sorted map in lockstep with the sorted outcome
  // set; keys outside omega are skipped, a missing key raises.
  using Cursor = std::map<std::string, Rational>::const_iterator;
  std::vector<Cursor> cursors;
  cursors.reserve(statistics.size());
  for (const auto& statistic : statistics) {
    cursors.push_back(statistic.values().begin());
  }
  std::map<std::string, Rational> values;
  for (const auto& id : trial.omega()) {
    const Rational* smallest = nullptr;
    for (std::size_t i = 0; i < statistics.size(); ++i) {
      Cursor& cursor = cursors[i];
      const Cursor end = statistics[i].values().end();
      while (cursor != end && cursor->first < id) ++cursor;
      if (cursor == end || cursor->first != id) {
        raise(errc::missing_statistic_value,
              "statistic has no value for outcome \"" + id + "\"");
      }
      if (smallest == nullptr || cursor->second < *smallest) {
        smallest = &cursor->second;
      }
    }
    values.emplace_hint(values.end(), id, n * *smallest);
  }
  return TestStatistic(std::move(values));
}

const char* p_kind_name(PKind kind) {
  switch (kind) {
    case PKind::not_p_function:
      return "not-p-function";
    case PKind::exact_p_function:
      return "exact";
    case PKind::conservative_p_function:
      return "conservative";
  }
  return "unknown";
}

}  // namespace pfunc
