#ifndef PFUNC_ERROR_HPP
#define PFUNC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pfunc {

// Every domain failure carries one of these codes; code_name() is the stable
// identifier reported by the CLI.
enum class errc {
  empty_space,
  duplicate_outcome_id,
  non_positive_probability,
  probability_sum_not_one,
  unknown_member,
  empty_event_in_input,
  too_large_to_expand,
  unknown_outcome,
  member_outside_omega,
  order_trial_mismatch,
  missing_statistic_value,
  negative_epsilon,
  non_positive_scale,
  empty_statistic_list,
  out_of_range,
  no_tickets_sold,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pfunc

#endif  // PFUNC_ERROR_HPP
