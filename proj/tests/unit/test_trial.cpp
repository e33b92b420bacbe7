#include <doctest.h>

#include <vector>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "pfunc/trial.hpp"

using namespace pfunc;
using pfunc::testing::error_code_of;
using pfunc::testing::frac;
using pfunc::testing::frac_equal;
using pfunc::testing::oracle_event_probability;

namespace {

Trial t0() {
  return Trial({{"a", Rational(99, 100)},
                {"b", Rational(9, 1000)},
                {"c", Rational(1, 1000)}});
}

}  // namespace

TEST_CASE("trial construction validates the space") {
  Trial trial = t0();
  CHECK(trial.size() == 3);
  CHECK(trial.contains("b"));
  CHECK(!trial.contains("d"));
  CHECK(trial.probability("a") == Rational(99, 100));
  CHECK(trial.omega() == std::set<std::string>{"a", "b", "c"});
  CHECK(error_code_of([&] { trial.probability("zzz"); }) ==
        errc::unknown_outcome);
}

TEST_CASE("trial construction rejects invalid spaces") {
  CHECK(error_code_of([] { Trial({}); }) == errc::empty_space);
  CHECK(error_code_of([] {
          Trial({{"a", Rational(1, 2)}, {"a", Rational(1, 2)}});
        }) == errc::duplicate_outcome_id);
  CHECK(error_code_of([] {
          Trial({{"a", Rational(0)}, {"b", Rational(1)}});
        }) == errc::non_positive_probability);
  CHECK(error_code_of([] {
          Trial({{"a", Rational(-1, 2)}, {"b", Rational(3, 2)}});
        }) == errc::non_positive_probability);
  CHECK(error_code_of([] {
          Trial({{"a", Rational(1, 2)}, {"b", Rational(1, 3)}});
        }) == errc::probability_sum_not_one);
  CHECK(error_code_of([] { Trial({{"", Rational(1)}}); }) ==
        errc::parse_error);
}

TEST_CASE("single outcome trial is the degenerate space") {
  Trial single({{"won", Rational(1)}});
  CHECK(single.probability("won") == Rational(1));
  CHECK(event_probability(single, {"won"}) == Rational(1));
}

TEST_CASE("event probability adds member probabilities") {
  Trial trial = t0();
  CHECK(event_probability(trial, {}) == Rational(0));
  CHECK(event_probability(trial, {"b", "c"}) == Rational(1, 100));
  CHECK(event_probability(trial, {"a", "b", "c"}) == Rational(1));
  CHECK(frac_equal(oracle_event_probability(trial, {"a", "c"}),
                   event_probability(trial, {"a", "c"})));
  CHECK(error_code_of([&] { event_probability(trial, {"a", "x"}); }) ==
        errc::unknown_member);
}

TEST_CASE("events rank by probability, smaller impugns more") {
  Trial trial = t0();
  std::vector<Event> events = {{"c"}, {"a"}, {"b", "c"}, {"b"}};
  auto groups = rank_events_by_impugning_power(trial, events);
  REQUIRE(groups.size() == 4);
  CHECK(groups[0] == std::vector<Event>{{"a"}});
  CHECK(groups[1] == std::vector<Event>{{"b", "c"}});
  CHECK(groups[2] == std::vector<Event>{{"b"}});
  CHECK(groups[3] == std::vector<Event>{{"c"}});

  // Equal probabilities collapse into one group, input order kept.
  Trial uniform({{"x", Rational(1, 3)},
                 {"y", Rational(1, 3)},
                 {"z", Rational(1, 3)}});
  auto tied = rank_events_by_impugning_power(
      uniform, {{"y"}, {"x"}, {"x", "z"}});
  REQUIRE(tied.size() == 2);
  CHECK(tied[0] == std::vector<Event>{{"x", "z"}});
  CHECK(tied[1] == std::vector<Event>{{"y"}, {"x"}});

  CHECK(error_code_of([&] {
          rank_events_by_impugning_power(trial, {{"a"}, {}});
        }) == errc::empty_event_in_input);
}

TEST_CASE("aggregated trial validates and reports totals") {
  AggregatedTrial agg({{"k0", Integer(1), Rational(1, 4)},
                       {"k1", Integer(2), Rational(1, 4)},
                       {"k2", Integer(1), Rational(1, 4)}});
  CHECK(agg.total_outcomes() == 4);
  CHECK(event_probability(agg, {"k1"}) == Rational(1, 2));
  CHECK(event_probability(agg, {"k0", "k2"}) == Rational(1, 2));
  CHECK(error_code_of([&] { event_probability(agg, {"k9"}); }) ==
        errc::unknown_member);

  CHECK(error_code_of([] { AggregatedTrial({}); }) == errc::empty_space);
  CHECK(error_code_of([] {
          AggregatedTrial({{"k", Integer(0), Rational(1)}});
        }) == errc::out_of_range);
  CHECK(error_code_of([] {
          AggregatedTrial({{"k", Integer(2), Rational(0)}});
        }) == errc::non_positive_probability);
  CHECK(error_code_of([] {
          AggregatedTrial({{"k", Integer(3), Rational(1, 2)}});
        }) == errc::probability_sum_not_one);
  CHECK(error_code_of([] {
          AggregatedTrial({{"k", Integer(2), Rational(1, 4)},
                           {"k", Integer(2), Rational(1, 4)}});
        }) == errc::duplicate_outcome_id);
}

TEST_CASE("class view carries class totals") {
  AggregatedTrial agg({{"k0", Integer(1), Rational(1, 8)},
                       {"k1", Integer(3), Rational(1, 8)},
                       {"k2", Integer(3), Rational(1, 8)},
                       {"k3", Integer(1), Rational(1, 8)}});
  Trial view = agg.class_view();
  CHECK(view.size() == 4);
  CHECK(view.probability("k0") == Rational(1, 8));
  CHECK(view.probability("k1") == Rational(3, 8));
  CHECK(event_probability(view, {"k0", "k3"}) ==
        event_probability(agg, {"k0", "k3"}));
}

TEST_CASE("expansion produces explicit interchangeable outcomes") {
  AggregatedTrial agg({{"k0", Integer(1), Rational(1, 4)},
                       {"k1", Integer(3), Rational(1, 4)}});
  Trial expanded = expand_aggregated(agg, Integer(10));
  CHECK(expanded.size() == 4);
  CHECK(expanded.contains("k0#0"));
  CHECK(expanded.contains("k1#2"));
  CHECK(expanded.probability("k1#0") == Rational(1, 4));
  CHECK(event_probability(expanded, {"k1#0", "k1#1", "k1#2"}) ==
        event_probability(agg, {"k1"}));

  CHECK(error_code_of([&] { expand_aggregated(agg, Integer(3)); }) ==
        errc::too_large_to_expand);
}
