#ifndef PFUNC_P_FUNCTION_HPP
#define PFUNC_P_FUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pfunc/test_tools.hpp"
#include "pfunc/trial.hpp"

namespace pfunc {

enum class PKind {
  not_p_function,
  exact_p_function,
  conservative_p_function,
};

/// A witness makes the verdict checkable by hand: for NotPFunction the
/// tail at epsilon exceeds epsilon; for Conservative, epsilon is a range
/// value whose tail falls strictly below it.
struct PWitness {
  Rational epsilon;
  Rational tail;
};

struct PFunctionClassification {
  PKind kind;
  std::optional<PWitness> witness;
};

/// Exact P{x : f(x) <= eps}; eps must be non-negative.
Rational tail_probability(const Trial& trial, const TestStatistic& statistic,
                          const Rational& eps);

/// P[<= x]: the probability of the downward closure of x.
Rational exact_p_value(const Trial& trial, const TestOrder& order,
                       const std::string& outcome);

/// P[f <= f(x)]. Consistent with exact_p_value through the induced order.
Rational exact_p_value_from_statistic(const Trial& trial,
                                      const TestStatistic& statistic,
                                      const std::string& outcome);

/// True iff P[f <= eps] <= eps for every eps >= 0.
bool is_p_function(const Trial& trial, const TestStatistic& statistic);

/// Full verdict with witness; see PWitness.
PFunctionClassification classify_p_function(const Trial& trial,
                                            const TestStatistic& statistic);

/// Pointwise multiplication by c > 0.
TestStatistic scale_statistic(const TestStatistic& statistic,
                              const Rational& c);

/// f(x) = n * min_i f_i(x). Combining p-functions this way stays a
/// p-function under multiple testing.
TestStatistic bonferroni(const Trial& trial,
                         const std::vector<TestStatistic>& statistics);

const char* p_kind_name(PKind kind);

}  // namespace pfunc

#endif  // PFUNC_P_FUNCTION_HPP
