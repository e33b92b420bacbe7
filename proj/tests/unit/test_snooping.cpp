#include <doctest.h>

#include <cstdint>

#include "expect_error.hpp"
#include "pfunc/snooping.hpp"

using namespace pfunc;
using pfunc::testing::error_code_of;

TEST_CASE("splitmix64 reproduces the published reference stream") {
  SplitMix64 zero(0);
  CHECK(zero.next() == 0xE220A8397B1DCDAFULL);
  CHECK(zero.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(zero.next() == 0x06C45D188009454FULL);
  CHECK(zero.next() == 0xF88BB8A8724C81ECULL);

  SplitMix64 one(1);
  CHECK(one.next() == 0x910A2DEC89025CC1ULL);
  CHECK(one.next() == 0xBEEB8DA1658EEC67ULL);
  CHECK(one.next() == 0xF893A2EEFB32555EULL);

  SplitMix64 big(0x123456789ABCDEFULL);
  CHECK(big.next() == 0x157A3807A48FAA9DULL);
  CHECK(big.next() == 0xD573529B34A1D093ULL);
}

TEST_CASE("simulation is deterministic for a pinned seed") {
  SnoopingReport r = snooping_simulation(15, 1, 7, 1000000);
  CHECK(r.repetitions_run == 1054);
  CHECK(r.triggered);
  CHECK(r.naive_p == Rational(1, 1024));
  CHECK(r.corrected_p == Rational(527, 512));
  CHECK(r.corrected_p > Rational(1));
  CHECK(r.seed == 7);

  SnoopingReport again = snooping_simulation(15, 1, 7, 1000000);
  CHECK(again.repetitions_run == r.repetitions_run);
  CHECK(again.corrected_p == r.corrected_p);

  CHECK(snooping_simulation(15, 1, 1, 1000000).repetitions_run == 2330);
  CHECK(snooping_simulation(15, 1, 2, 1000000).repetitions_run == 177);
  CHECK(snooping_simulation(15, 1, 3, 1000000).repetitions_run == 3659);
}

TEST_CASE("corrected p-value is the repetition count times the naive one") {
  for (std::uint64_t seed : {2ULL, 7ULL, 99ULL}) {
    SnoopingReport r = snooping_simulation(15, 1, seed, 1000000);
    CHECK(r.corrected_p == Rational(r.repetitions_run) * r.naive_p);
  }
  SnoopingReport strict = snooping_simulation(15, 0, 7, 2000000);
  CHECK(strict.repetitions_run == 9255);
  CHECK(strict.naive_p == Rational(1, 16384));
  CHECK(strict.corrected_p == Rational(9255, 16384));
}

TEST_CASE("the repetition cap stops an unlucky run") {
  SnoopingReport r = snooping_simulation(15, 1, 7, 100);
  CHECK(r.repetitions_run == 100);
  CHECK_FALSE(r.triggered);
  CHECK(r.corrected_p == Rational(100, 1024));
}

TEST_CASE("parameters outside the coin model are rejected") {
  CHECK(error_code_of([] { snooping_simulation(0, 0, 1, 10); }) ==
        errc::out_of_range);
  CHECK(error_code_of([] { snooping_simulation(65, 1, 1, 10); }) ==
        errc::out_of_range);
  CHECK(error_code_of([] { snooping_simulation(15, -1, 1, 10); }) ==
        errc::out_of_range);
  CHECK(error_code_of([] { snooping_simulation(15, 8, 1, 10); }) ==
        errc::out_of_range);
  CHECK(error_code_of([] { snooping_simulation(15, 1, 1, 0); }) ==
        errc::out_of_range);
  CHECK_NOTHROW(snooping_simulation(15, 7, 1, 1));
}
