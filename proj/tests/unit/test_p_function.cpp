#include <doctest.h>

#include <vector>

#include "expect_error.hpp"
#include "pfunc/p_function.hpp"

using namespace pfunc;
using pfunc::testing::error_code_of;

namespace {

Trial t0() {
  return Trial({{"a", Rational(99, 100)},
                {"b", Rational(9, 1000)},
                {"c", Rational(1, 1000)}});
}

TestStatistic f_hat() {
  return TestStatistic({{"a", Rational(1)},
                        {"b", Rational(1, 100)},
                        {"c", Rational(1, 1000)}});
}

}  // namespace

TEST_CASE("tail probability sums the sublevel event") {
  Trial trial = t0();
  TestStatistic f = f_hat();
  CHECK(tail_probability(trial, f, Rational(0)) == Rational(0));
  CHECK(tail_probability(trial, f, Rational(1, 1000)) == Rational(1, 1000));
  CHECK(tail_probability(trial, f, Rational(1, 2)) == Rational(1, 100));
  CHECK(tail_probability(trial, f, Rational(1)) == Rational(1));
  CHECK(tail_probability(trial, f, Rational(50)) == Rational(1));
  CHECK(error_code_of([&] { tail_probability(trial, f, Rational(-1)); }) ==
        errc::negative_epsilon);
}

TEST_CASE("exact p-value through order and statistic agree") {
  Trial trial = t0();
  TestOrder order({{"c"}, {"b"}, {"a"}});
  CHECK(exact_p_value(trial, order, "c") == Rational(1, 1000));
  CHECK(exact_p_value(trial, order, "b") == Rational(1, 100));
  CHECK(exact_p_value(trial, order, "a") == Rational(1));
  for (const auto& id : trial.omega()) {
    CHECK(exact_p_value(trial, order, id) ==
          exact_p_value_from_statistic(trial, f_hat(), id));
  }
  CHECK(error_code_of([&] { exact_p_value(trial, order, "zzz"); }) ==
        errc::unknown_outcome);

  // Negative statistic values are fine for p-values (only the ranking
  // matters), unlike for tail_probability's epsilon.
  TestStatistic negative({{"a", Rational(0)},
                          {"b", Rational(-1)},
                          {"c", Rational(-2)}});
  CHECK(exact_p_value_from_statistic(trial, negative, "b") ==
        Rational(1, 100));
}

TEST_CASE("classification: exact") {
  auto verdict = classify_p_function(t0(), f_hat());
  CHECK(verdict.kind == PKind::exact_p_function);
  CHECK(!verdict.witness.has_value());
  CHECK(is_p_function(t0(), f_hat()));
}

TEST_CASE("classification: conservative with a strict range point") {
  Trial trial = t0();
  auto verdict =
      classify_p_function(trial, scale_statistic(f_hat(), Rational(2)));
  REQUIRE(verdict.kind == PKind::conservative_p_function);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->epsilon == Rational(1, 500));
  CHECK(verdict.witness->tail == Rational(1, 1000));
  // The witness survives recomputation.
  CHECK(tail_probability(trial, scale_statistic(f_hat(), Rational(2)),
                         verdict.witness->epsilon) == verdict.witness->tail);
}

TEST_CASE("classification: halving an exact p-function breaks it") {
  Trial trial = t0();
  auto verdict =
      classify_p_function(trial, scale_statistic(f_hat(), Rational(1, 2)));
  REQUIRE(verdict.kind == PKind::not_p_function);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->epsilon == Rational(1, 2000));
  CHECK(verdict.witness->tail == Rational(1, 1000));
  CHECK(verdict.witness->tail > verdict.witness->epsilon);
  CHECK(!is_p_function(trial, scale_statistic(f_hat(), Rational(1, 2))));
}

TEST_CASE("classification: negative and zero values sink at epsilon zero") {
  Trial trial = t0();
  TestStatistic with_zero({{"a", Rational(1)},
                           {"b", Rational(1, 100)},
                           {"c", Rational(0)}});
  auto verdict = classify_p_function(trial, with_zero);
  REQUIRE(verdict.kind == PKind::not_p_function);
  CHECK(verdict.witness->epsilon == Rational(0));
  CHECK(verdict.witness->tail == Rational(1, 1000));

  TestStatistic with_negative({{"a", Rational(1)},
                               {"b", Rational(-3)},
                               {"c", Rational(0)}});
  auto verdict2 = classify_p_function(trial, with_negative);
  REQUIRE(verdict2.kind == PKind::not_p_function);
  CHECK(verdict2.witness->epsilon == Rational(0));
  // The tail at zero includes the mass at zero itself, not only below it.
  CHECK(verdict2.witness->tail == Rational(1, 100));
  CHECK(tail_probability(trial, with_negative, Rational(0)) ==
        Rational(1, 100));
}

TEST_CASE("the constant one statistic is an exact p-function") {
  TestStatistic one({{"a", Rational(1)},
                     {"b", Rational(1)},
                     {"c", Rational(1)}});
  CHECK(classify_p_function(t0(), one).kind == PKind::exact_p_function);
}

TEST_CASE("scaling multiplies every value") {
  TestStatistic f = f_hat();
  TestStatistic scaled = scale_statistic(f, Rational(3, 2));
  CHECK(scaled.at("a") == Rational(3, 2));
  CHECK(scaled.at("b") == Rational(3, 200));
  CHECK(scaled.at("c") == Rational(3, 2000));
  CHECK(error_code_of([&] { scale_statistic(f, Rational(0)); }) ==
        errc::non_positive_scale);
  CHECK(error_code_of([&] { scale_statistic(f, Rational(-2)); }) ==
        errc::non_positive_scale);
}

TEST_CASE("bonferroni is n times the pointwise minimum") {
  Trial trial = t0();
  TestStatistic f1 = f_hat();
  TestStatistic f2({{"a", Rational(99, 100)},
                    {"b", Rational(999, 1000)},
                    {"c", Rational(1)}});
  TestStatistic combined = bonferroni(trial, {f1, f2});
  CHECK(combined.at("a") == Rational(99, 50));
  CHECK(combined.at("b") == Rational(1, 50));
  CHECK(combined.at("c") == Rational(1, 500));
  CHECK(is_p_function(trial, combined));

  // One statistic: the correction is the identity.
  TestStatistic alone = bonferroni(trial, {f1});
  for (const auto& id : trial.omega()) {
    CHECK(alone.at(id) == f1.at(id));
  }

  // Two copies of an exact p-function: valid but conservative.
  auto verdict = classify_p_function(trial, bonferroni(trial, {f1, f1}));
  CHECK(verdict.kind == PKind::conservative_p_function);

  CHECK(error_code_of([&] { bonferroni(trial, {}); }) ==
        errc::empty_statistic_list);
  TestStatistic partial({{"a", Rational(1)}});
  CHECK(error_code_of([&] { bonferroni(trial, {f1, partial}); }) ==
        errc::missing_statistic_value);
}

TEST_CASE("kind names are stable") {
  CHECK(std::string(p_kind_name(PKind::exact_p_function)) == "exact");
  CHECK(std::string(p_kind_name(PKind::conservative_p_function)) ==
        "conservative");
  CHECK(std::string(p_kind_name(PKind::not_p_function)) == "not-p-function");
}
