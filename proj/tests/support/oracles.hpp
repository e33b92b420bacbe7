#ifndef PFUNC_TESTS_SUPPORT_ORACLES_HPP
#define PFUNC_TESTS_SUPPORT_ORACLES_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <string>
#include <vector>

#include "pfunc/lottery.hpp"
#include "pfunc/test_tools.hpp"
#include "pfunc/trial.hpp"

namespace pfunc::testing {

/// Minimal fraction type rebuilt from scratch on raw big integers. The
/// oracles below use it instead of Rational so that every checked value is
/// reproduced by code that shares nothing with the library's arithmetic.
struct Frac {
  boost::multiprecision::cpp_int num = 0;
  boost::multiprecision::cpp_int den = 1;
};

Frac frac(long long num, long long den = 1);
Frac frac_of(const Rational& r);
Frac frac_add(const Frac& a, const Frac& b);
Frac frac_div(const Frac& a, const Frac& b);
int frac_compare(const Frac& a, const Frac& b);
bool frac_equal(const Frac& a, const Rational& r);

/// Sum of outcome probabilities by direct accumulation.
Frac oracle_event_probability(const Trial& trial, const Event& event);

/// Level sets of the statistic, ascending by value.
std::vector<std::set<std::string>> oracle_order_from_statistic(
    const Trial& trial, const TestStatistic& statistic);

/// Rank by the first pyramid event containing each outcome; outcomes in no
/// event share the final rank.
std::vector<std::set<std::string>> oracle_order_from_pyramid(
    const std::set<std::string>& omega, const TestPyramid& pyramid);

/// P{x : f(x) <= eps} by direct scan.
Frac oracle_tail(const Trial& trial, const TestStatistic& statistic,
                 const Frac& eps);

/// The p-function predicate evaluated over a dense epsilon grid: zero, every
/// range value, every midpoint between consecutive range values, and a point
/// beyond the maximum. Deliberately denser than the library's checkpoints.
bool oracle_is_p_function(const Trial& trial, const TestStatistic& statistic);

/// C(n, k) from the Pascal triangle recurrence.
boost::multiprecision::cpp_int oracle_binomial(int n, int k);

/// P[min(heads, tails) <= threshold] by enumerating all 2^n toss sequences.
/// Requires n <= 20.
Frac oracle_coin_tail(int tosses, int threshold);

/// P[distance <= threshold] with every cohort member expanded into an
/// explicit vertex and breadth-first search run on the full graph.
Frac oracle_lottery_tail(const LotterySpec& spec, long long threshold);

}  // namespace pfunc::testing

#endif  // PFUNC_TESTS_SUPPORT_ORACLES_HPP
