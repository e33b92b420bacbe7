#ifndef PFUNC_LOTTERY_HPP
#define PFUNC_LOTTERY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfunc/test_tools.hpp"
#include "pfunc/trial.hpp"

namespace pfunc {

struct LotteryParticipant {
  std::string id;
  Integer tickets;  // non-negative; zero means vertex only, no outcome
};

/// `count` anonymous participants, each holding `tickets_each` tickets and
/// each connected by an edge to every vertex in `attached_to` (and to
/// nothing else). Members of one cohort are interchangeable, so the whole
/// cohort shares one graph distance and one per-ticket probability — the
/// aggregated representation that keeps paper-scale inputs exact.
struct LotteryCohort {
  std::string id;
  Integer count;
  Integer tickets_each;  // at least 1
  std::vector<std::string> attached_to;
};

struct LotterySpec {
  std::string organizer;
  std::vector<LotteryParticipant> participants;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<LotteryCohort> cohorts;
};

/// Structural validation: unique ids, known edge endpoints, cohort
/// attachments to named vertices, non-negative ticket counts.
void validate_lottery_spec(const LotterySpec& spec);

/// Explicit trial: one outcome per ticket-holding participant (cohort
/// members appear as "cohortid#k"), P = tickets / total tickets.
Trial lottery_trial(const LotterySpec& spec, const Integer& limit = 200000);

/// One class per named ticket holder (size 1) and per cohort. Exact at any
/// scale; the class view backs lottery_p_value.
AggregatedTrial lottery_aggregated_trial(const LotterySpec& spec);

/// Graph distance from the organizer, per class id (named participants and
/// cohorts). Unreachable vertices get the total vertex count, strictly
/// above any realizable distance.
TestStatistic lottery_distance_statistic(const LotterySpec& spec);

/// Exact P{X : distance(X) <= threshold} = tickets held within the
/// threshold distance over total tickets.
Rational lottery_p_value(const LotterySpec& spec, long long threshold);

}  // namespace pfunc

#endif  // PFUNC_LOTTERY_HPP
