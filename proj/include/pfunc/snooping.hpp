#ifndef PFUNC_SNOOPING_HPP
#define PFUNC_SNOOPING_HPP

#include <cstdint>

#include "pfunc/rational.hpp"

namespace pfunc {

/// splitmix64: the pinned generator behind the snooping simulation. One
/// 64-bit word of state, no weak seeds, bit-reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

struct SnoopingReport {
  long long repetitions_run = 0;
  bool triggered = false;
  Rational naive_p;
  Rational corrected_p;  // repetitions_run * naive_p when triggered
  std::uint64_t seed = 0;
};

/// Repeats the n-toss fair-coin trial until min(heads, tails) drops to
/// `threshold` or `max_reps` is exhausted. naive_p is the single-trial
/// p-value at the threshold; corrected_p multiplies it by the number of
/// repetitions actually run. Deterministic given (seed, parameters).
SnoopingReport snooping_simulation(int n_tosses, int threshold,
                                   std::uint64_t seed, long long max_reps);

}  // namespace pfunc

#endif  // PFUNC_SNOOPING_HPP
