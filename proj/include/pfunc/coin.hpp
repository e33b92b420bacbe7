#ifndef PFUNC_COIN_HPP
#define PFUNC_COIN_HPP

#include "pfunc/test_tools.hpp"
#include "pfunc/trial.hpp"

namespace pfunc {

/// Fair-coin trial with `tosses` tosses, aggregated by heads count: class
/// "k<i>" has size C(tosses, i) and per-element probability 2^-tosses.
/// Supported range: 1 <= tosses <= 64.
AggregatedTrial coin_trial(int tosses);

/// The min(heads, tails) statistic on the classes of coin_trial(tosses).
TestStatistic coin_min_statistic(int tosses);

/// Exact P[min(heads, tails) <= observed_min] for the fair-coin trial.
Rational coin_p_value(int tosses, int observed_min);

}  // namespace pfunc

#endif  // PFUNC_COIN_HPP
