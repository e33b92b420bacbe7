#include "pfunc/coin.hpp"

#include <string>

#include "pfunc/error.hpp"
#include "pfunc/p_function.hpp"

namespace pfunc {

namespace {

void check_tosses(int tosses) {
  if (tosses < 1 || tosses > 64) {
    raise(errc::out_of_range, "tosses must be between 1 and 64, got " +
                                  std::to_string(tosses));
  }
}

std::string class_id(int k) { return "k" + std::to_string(k); }

}  // namespace

AggregatedTrial coin_trial(int tosses) {
  check_tosses(tosses);
  Rational per_element(Integer(1), pow2(static_cast<unsigned>(tosses)));
  std::vector<AggregatedClass> classes;
  classes.reserve(static_cast<std::size_t>(tosses) + 1);
  Integer binom = 1;  // C(tosses, 0)
  for (int k = 0; k <= tosses; ++k) {
    classes.push_back({class_id(k), binom, per_element});
    binom = binom * (tosses - k) / (k + 1);
  }
  return AggregatedTrial(std::move(classes));
}

TestStatistic coin_min_statistic(int tosses) {
  check_tosses(tosses);
  std::map<std::string, Rational> values;
  for (int k = 0; k <= tosses; ++k) {
    values.emplace(class_id(k), Rational(std::min(k, tosses - k)));
  }
  return TestStatistic(std::move(values));
}

Rational coin_p_value(int tosses, int observed_min) {
  check_tosses(tosses);
  if (observed_min < 0 || observed_min > tosses / 2) {
    raise(errc::out_of_range,
          "observed min must be between 0 and " + std::to_string(tosses / 2) +
              ", got " + std::to_string(observed_min));
  }
  Trial classes = coin_trial(tosses).class_view();
  TestStatistic min_stat = coin_min_statistic(tosses);
  return exact_p_value_from_statistic(classes, min_stat,
                                      class_id(observed_min));
}

}  // namespace pfunc
