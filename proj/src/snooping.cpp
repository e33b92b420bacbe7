#include "pfunc/snooping.hpp"

#include <bit>
#include <string>

#include "pfunc/coin.hpp"
#include "pfunc/error.hpp"

namespace pfunc {

SnoopingReport snooping_simulation(int n_tosses, int threshold,
                                   std::uint64_t seed, long long max_reps) {
  if (n_tosses < 1 || n_tosses > 64) {
    raise(errc::out_of_range, "tosses must be between 1 and 64, got " +
                                  std::to_string(n_tosses));
  }
  if (threshold < 0 || threshold > n_tosses / 2) {
    raise(errc::out_of_range,
          "threshold must be between 0 and " + std::to_string(n_tosses / 2) +
              ", got " + std::to_string(threshold));
  }
  if (max_reps < 1) {
    raise(errc::out_of_range, "max repetitions must be at least 1");
  }

  SplitMix64 rng(seed);
  std::uint64_t mask = n_tosses == 64 ? ~0ULL : (1ULL << n_tosses) - 1;
  SnoopingReport report;
  report.seed = seed;
  report.naive_p = coin_p_value(n_tosses, threshold);
  while (report.repetitions_run < max_reps && !report.triggered) {
    ++report.repetitions_run;
    int heads = std::popcount(rng.next() & mask);
    int m = std::min(heads, n_tosses - heads);
    report.triggered = m <= threshold;
  }
  report.corrected_p = Rational(report.repetitions_run) * report.naive_p;
  return report;
}

}  // namespace pfunc
