#include "pfunc/lottery.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "pfunc/error.hpp"
#include "pfunc/p_function.hpp"

namespace pfunc {

namespace {

std::set<std::string> named_vertices(const LotterySpec& spec) {
  std::set<std::string> named;
  named.insert(spec.organizer);
  for (const auto& p : spec.participants) named.insert(p.id);
  return named;
}

// Number of vertices of the full graph: all participants (cohort members
// included) plus the organizer if they are not listed as a participant.
Integer vertex_count(const LotterySpec& spec) {
  Integer count = static_cast<long long>(spec.participants.size());
  for (const auto& c : spec.cohorts) count += c.count;
  bool organizer_listed =
      std::any_of(spec.participants.begin(), spec.participants.end(),
                  [&](const LotteryParticipant& p) { return p.id == spec.organizer; });
  if (!organizer_listed) count += 1;
  return count;
}

// BFS distances from the organizer over the quotient graph: named vertices
// plus one representative node per cohort. Exact for cohort members because
// they carry edges only to their named attachments, so any shortest path
// through a member enters and leaves via those attachments. Unreachable
// nodes are absent from the result.
std::map<std::string, long long> bfs_distances(const LotterySpec& spec) {
  std::map<std::string, std::vector<std::string>> adjacency;
  for (const auto& [a, b] : spec.edges) {
    adjacency[a].push_back(b);
    adjacency[b].push_back(a);
  }
  for (const auto& c : spec.cohorts) {
    for (const auto& hub : c.attached_to) {
      adjacency[c.id].push_back(hub);
      adjacency[hub].push_back(c.id);
    }
  }
  std::map<std::string, long long> dist;
  std::deque<std::string> queue;
  dist[spec.organizer] = 0;
  queue.push_back(spec.organizer);
  while (!queue.empty()) {
    std::string node = queue.front();
    queue.pop_front();
    for (const auto& next : adjacency[node]) {
      if (dist.count(next) == 0) {
        dist[next] = dist[node] + 1;
        queue.push_back(next);
      }
    }
  }
  return dist;
}

Integer total_tickets(const LotterySpec& spec) {
  Integer total = 0;
  for (const auto& p : spec.participants) total += p.tickets;
  for (const auto& c : spec.cohorts) total += c.count * c.tickets_each;
  return total;
}

}  // namespace

void validate_lottery_spec(const LotterySpec& spec) {
  if (spec.organizer.empty()) {
    raise(errc::parse_error, "lottery spec needs an organizer id");
  }
  std::set<std::string> ids;
  ids.insert(spec.organizer);
  for (const auto& p : spec.participants) {
    if (p.id.empty()) {
      raise(errc::parse_error, "participant ids must be non-empty");
    }
    if (p.id != spec.organizer && !ids.insert(p.id).second) {
      raise(errc::duplicate_outcome_id,
            "duplicate participant id \"" + p.id + "\"");
    }
    if (p.tickets < 0) {
      raise(errc::out_of_range,
            "participant \"" + p.id + "\" has a negative ticket count");
    }
  }
  std::set<std::string> named = named_vertices(spec);
  for (const auto& c : spec.cohorts) {
    if (c.id.empty()) {
      raise(errc::parse_error, "cohort ids must be non-empty");
    }
    if (!ids.insert(c.id).second) {
      raise(errc::duplicate_outcome_id,
            "cohort id \"" + c.id + "\" collides with another id");
    }
    if (c.count < 1) {
      raise(errc::out_of_range,
            "cohort \"" + c.id + "\" must have at least one member");
    }
    if (c.tickets_each < 1) {
      raise(errc::out_of_range,
            "cohort \"" + c.id + "\" members must hold at least one ticket");
    }
    for (const auto& hub : c.attached_to) {
      if (named.count(hub) == 0) {
        raise(errc::unknown_member,
              "cohort \"" + c.id + "\" attaches to unknown vertex \"" + hub +
                  "\"");
      }
    }
  }
  for (const auto& [a, b] : spec.edges) {
    if (named.count(a) == 0 || named.count(b) == 0) {
      raise(errc::unknown_member,
            "edge [" + a + ", " + b + "] references an unknown vertex");
    }
  }
}

AggregatedTrial lottery_aggregated_trial(const LotterySpec& spec) {
  validate_lottery_spec(spec);
  Integer total = total_tickets(spec);
  if (total < 1) {
    raise(errc::no_tickets_sold, "no lottery tickets were sold");
  }
  std::vector<AggregatedClass> classes;
  for (const auto& p : spec.participants) {
    if (p.tickets >= 1) {
      classes.push_back({p.id, 1, Rational(p.tickets, total)});
    }
  }
  for (const auto& c : spec.cohorts) {
    classes.push_back({c.id, c.count, Rational(c.tickets_each, total)});
  }
  return AggregatedTrial(std::move(classes));
}

Trial lottery_trial(const LotterySpec& spec, const Integer& limit) {
  validate_lottery_spec(spec);
  Integer total = total_tickets(spec);
  if (total < 1) {
    raise(errc::no_tickets_sold, "no lottery tickets were sold");
  }
  Integer outcome_count = 0;
  for (const auto& p : spec.participants) {
    if (p.tickets >= 1) outcome_count += 1;
  }
  for (const auto& c : spec.cohorts) outcome_count += c.count;
  if (outcome_count > limit) {
    raise(errc::too_large_to_expand,
          "lottery has " + outcome_count.str() +
              " ticket-holding participants, above the expansion limit " +
              limit.str());
  }
  std::vector<OutcomeProb> outcomes;
  for (const auto& p : spec.participants) {
    if (p.tickets >= 1) {
      outcomes.push_back({p.id, Rational(p.tickets, total)});
    }
  }
  for (const auto& c : spec.cohorts) {
    for (Integer k = 0; k < c.count; ++k) {
      outcomes.push_back(
          {c.id + "#" + k.str(), Rational(c.tickets_each, total)});
    }
  }
  return Trial(std::move(outcomes));
}

TestStatistic lottery_distance_statistic(const LotterySpec& spec) {
  validate_lottery_spec(spec);
  auto dist = bfs_distances(spec);
  Rational sentinel{vertex_count(spec)};
  std::map<std::string, Rational> values;
  for (const auto& p : spec.participants) {
    auto it = dist.find(p.id);
    values.emplace(p.id, it == dist.end() ? sentinel : Rational(it->second));
  }
  for (const auto& c : spec.cohorts) {
    auto it = dist.find(c.id);
    values.emplace(c.id, it == dist.end() ? sentinel : Rational(it->second));
  }
  return TestStatistic(std::move(values));
}

Rational lottery_p_value(const LotterySpec& spec, long long threshold) {
  if (threshold < 0) {
    raise(errc::out_of_range, "distance threshold must be non-negative");
  }
  Trial classes = lottery_aggregated_trial(spec).class_view();
  TestStatistic distance = lottery_distance_statistic(spec);
  return tail_probability(classes, distance, Rational(threshold));
}

}  // namespace pfunc
