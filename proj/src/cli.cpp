#include "pfunc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "pfunc/coin.hpp"
#include "pfunc/error.hpp"
#include "pfunc/json_io.hpp"
#include "pfunc/lottery.hpp"
#include "pfunc/p_function.hpp"
#include "pfunc/snooping.hpp"

namespace pfunc {
namespace {

std::string with_decimal(const Rational& r) {
  return r.str() + " (~ " + r.decimal() + ")";
}

Json induced_report(const Trial& trial, const std::string& from,
                    const std::string& to, const Json& input) {
  const auto omega = trial.omega();
  if (from == "order") {
    TestOrder order = order_from_json(input);
    if (!order.partitions(omega)) {
      raise(errc::order_trial_mismatch,
            "order does not partition the trial's outcome set");
    }
    if (to == "order") return to_json(order);
    if (to == "pyramid") return to_json(induce_pyramid_from_order(order));
    return to_json(induce_statistic_from_order(trial, order));
  }
  if (from == "pyramid") {
    TestPyramid pyramid = pyramid_from_json(input);
    TestOrder order = induce_order_from_pyramid(omega, pyramid);
    if (to == "pyramid") return to_json(pyramid);
    if (to == "order") return to_json(order);
    return to_json(induce_statistic_from_order(trial, order));
  }
  TestStatistic statistic = statistic_from_json(input);
  TestOrder order = induce_order_from_statistic(trial, statistic);
  if (to == "statistic") return to_json(statistic);
  if (to == "order") return to_json(order);
  return to_json(induce_pyramid_from_order(order));
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact p-values, test tools and p-function checks for discrete "
               "probability trials",
               "pfunc"};
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one machine-readable JSON object");

  int status = 0;
  auto emit = [&](const Json& report, const std::string& human) {
    if (json_mode) {
      out << report.dump() << "\n";
    } else {
      out << human;
    }
  };
  auto emit_artifact = [&](const Json& report) {
    emit(report, report.dump(2) + "\n");
  };

  std::string trial_file;
  std::string input_file;
  std::string statistic_file;
  std::string order_file;
  std::string spec_file;
  std::string from_kind;
  std::string to_kind;
  std::string canonize_kind;
  std::string outcome_id;
  std::string bound_text;
  std::vector<std::string> statistic_files;
  bool strict = false;
  int tosses = 0;
  int observed_min = 0;
  int snoop_threshold = 0;
  long long lottery_threshold = 0;
  long long max_reps = 0;
  std::uint64_t seed = 0;

  auto load_tool_trial = [&] {
    return tool_view(any_trial_from_json(load_json_file(trial_file)));
  };
  auto apply_bound = [&](Json& report, std::string& human, const Rational& p) {
    if (bound_text.empty()) {
      return;
    }
    Rational bound = Rational::parse(bound_text);
    const char* compare = p < bound ? "lt" : (p == bound ? "eq" : "gt");
    const char* sign = p < bound ? "<" : (p == bound ? "=" : ">");
    report["bound"] = bound.str();
    report["compare"] = compare;
    human += std::string("p ") + sign + " " + bound.str() + "\n";
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a trial file's invariants");
  validate_cmd->fallthrough();
  validate_cmd->add_option("--trial", trial_file, "trial JSON file")
      ->required();
  validate_cmd->callback([&] {
    AnyTrial trial = any_trial_from_json(load_json_file(trial_file));
    if (const auto* explicit_trial = std::get_if<Trial>(&trial)) {
      emit(Json{{"ok", true},
                {"kind", "explicit"},
                {"outcomes", explicit_trial->size()}},
           "ok: explicit trial with " +
               std::to_string(explicit_trial->size()) + " outcomes\n");
    } else {
      const auto& aggregated = std::get<AggregatedTrial>(trial);
      emit(Json{{"ok", true},
                {"kind", "aggregated"},
                {"classes", aggregated.classes().size()},
                {"total_outcomes", aggregated.total_outcomes().str()}},
           "ok: aggregated trial with " +
               std::to_string(aggregated.classes().size()) +
               " classes covering " + aggregated.total_outcomes().str() +
               " outcomes\n");
    }
  });

  CLI::App* induce_cmd = app.add_subcommand(
      "induce", "convert between test orders, pyramids and statistics");
  induce_cmd->fallthrough();
  induce_cmd->add_option("--trial", trial_file, "trial JSON file")->required();
  induce_cmd->add_option("--from", from_kind, "input tool kind")
      ->required()
      ->check(CLI::IsMember({"order", "pyramid", "statistic"}));
  induce_cmd->add_option("--to", to_kind, "output tool kind")
      ->required()
      ->check(CLI::IsMember({"order", "pyramid", "statistic"}));
  induce_cmd->add_option("--input", input_file, "tool JSON file")->required();
  induce_cmd->callback([&] {
    emit_artifact(induced_report(load_tool_trial(), from_kind, to_kind,
                                 load_json_file(input_file)));
  });

  CLI::App* canonize_cmd = app.add_subcommand(
      "canonize", "canonic version of a pyramid or statistic");
  canonize_cmd->fallthrough();
  canonize_cmd->add_option("--trial", trial_file, "trial JSON file")
      ->required();
  canonize_cmd->add_option("--kind", canonize_kind, "tool kind")
      ->required()
      ->check(CLI::IsMember({"pyramid", "statistic"}));
  canonize_cmd->add_option("--input", input_file, "tool JSON file")
      ->required();
  canonize_cmd->callback([&] {
    Trial trial = load_tool_trial();
    Json input = load_json_file(input_file);
    if (canonize_kind == "pyramid") {
      emit_artifact(to_json(
          canonic_version_of_pyramid(trial.omega(), pyramid_from_json(input))));
    } else {
      emit_artifact(to_json(
          canonic_version_of_statistic(trial, statistic_from_json(input))));
    }
  });

  CLI::App* check_cmd = app.add_subcommand(
      "check", "classify a statistic: exact, conservative, or no p-function");
  check_cmd->fallthrough();
  check_cmd->add_option("--trial", trial_file, "trial JSON file")->required();
  check_cmd->add_option("--statistic", statistic_file, "statistic JSON file")
      ->required();
  check_cmd->add_flag("--strict", strict,
                      "exit 1 unless the verdict is exact");
  check_cmd->callback([&] {
    PFunctionClassification verdict =
        classify_p_function(load_tool_trial(),
                            statistic_from_json(load_json_file(statistic_file)));
    std::string human;
    switch (verdict.kind) {
      case PKind::exact_p_function:
        human = "exact p-function\n";
        break;
      case PKind::conservative_p_function:
        human = "conservative p-function; witness: P[f <= " +
                verdict.witness->epsilon.str() + "] = " +
                verdict.witness->tail.str() + " < " +
                verdict.witness->epsilon.str() + "\n";
        break;
      case PKind::not_p_function:
        human = "not a p-function; witness: P[f <= " +
                verdict.witness->epsilon.str() + "] = " +
                verdict.witness->tail.str() + " > " +
                verdict.witness->epsilon.str() + "\n";
        break;
    }
    emit(to_json(verdict), human);
    if (strict && verdict.kind != PKind::exact_p_function) {
      status = 1;
    }
  });

  CLI::App* pvalue_cmd = app.add_subcommand(
      "pvalue", "exact p-value of an observed outcome under a test tool");
  pvalue_cmd->fallthrough();
  pvalue_cmd->add_option("--trial", trial_file, "trial JSON file")->required();
  CLI::App* pvalue_source = pvalue_cmd->add_option_group(
      "tool", "the test tool ranking the outcomes");
  pvalue_source->add_option("--order", order_file, "test order JSON file");
  pvalue_source->add_option("--statistic", statistic_file,
                            "test statistic JSON file");
  pvalue_source->require_option(1);
  pvalue_cmd->add_option("--outcome", outcome_id, "observed outcome id")
      ->required();
  pvalue_cmd->callback([&] {
    Trial trial = load_tool_trial();
    Rational p =
        order_file.empty()
            ? exact_p_value_from_statistic(
                  trial, statistic_from_json(load_json_file(statistic_file)),
                  outcome_id)
            : exact_p_value(trial, order_from_json(load_json_file(order_file)),
                            outcome_id);
    emit(Json{{"p", p.str()}}, "p = " + with_decimal(p) + "\n");
  });

  CLI::App* bonferroni_cmd = app.add_subcommand(
      "bonferroni", "combine statistics into n times their pointwise min");
  bonferroni_cmd->fallthrough();
  bonferroni_cmd->add_option("--trial", trial_file, "trial JSON file")
      ->required();
  bonferroni_cmd
      ->add_option("--statistic", statistic_files,
                   "statistic JSON file (repeat per statistic)")
      ->required()
      ->take_all();
  bonferroni_cmd->callback([&] {
    Trial trial = load_tool_trial();
    std::vector<TestStatistic> statistics;
    statistics.reserve(statistic_files.size());
    for (const auto& path : statistic_files) {
      statistics.push_back(statistic_from_json(load_json_file(path)));
    }
    emit_artifact(to_json(bonferroni(trial, statistics)));
  });

  CLI::App* example_cmd =
      app.add_subcommand("example", "built-in worked examples");
  example_cmd->fallthrough();
  example_cmd->require_subcommand(1);

  CLI::App* coin_cmd = example_cmd->add_subcommand(
      "coin", "fair-coin trial, aggregated by heads count");
  coin_cmd->fallthrough();
  coin_cmd->add_option("--tosses", tosses, "number of tosses (1..64)")
      ->required();
  CLI::Option* observed_min_opt = coin_cmd->add_option(
      "--observed-min", observed_min,
      "observed min(heads, tails); reports its exact p-value");
  CLI::Option* coin_bound_opt = coin_cmd->add_option(
      "--bound", bound_text, "rational to compare the p-value against");
  coin_bound_opt->needs(observed_min_opt);
  coin_cmd->callback([&] {
    if (observed_min_opt->count() == 0) {
      emit_artifact(to_json(coin_trial(tosses)));
      return;
    }
    Rational p = coin_p_value(tosses, observed_min);
    Json report{{"p", p.str()}};
    std::string human = "p = " + with_decimal(p) + "\n";
    apply_bound(report, human, p);
    emit(report, human);
  });

  CLI::App* lottery_cmd = example_cmd->add_subcommand(
      "lottery", "lottery trial with the organizer-distance statistic");
  lottery_cmd->fallthrough();
  lottery_cmd->add_option("--spec", spec_file, "lottery spec JSON file")
      ->required();
  CLI::Option* lottery_threshold_opt = lottery_cmd->add_option(
      "--threshold", lottery_threshold,
      "distance threshold; reports P[distance <= threshold]");
  lottery_cmd
      ->add_option("--bound", bound_text,
                   "rational to compare the p-value against")
      ->needs(lottery_threshold_opt);
  lottery_cmd->callback([&] {
    LotterySpec spec = lottery_spec_from_json(load_json_file(spec_file));
    if (lottery_threshold_opt->count() == 0) {
      emit_artifact(to_json(lottery_aggregated_trial(spec)));
      return;
    }
    Rational p = lottery_p_value(spec, lottery_threshold);
    Json report{{"p", p.str()}};
    std::string human = "p = " + with_decimal(p) + "\n";
    apply_bound(report, human, p);
    emit(report, human);
  });

  CLI::App* snoop_cmd = app.add_subcommand(
      "snoop", "repeat the coin trial until a small p-value appears");
  snoop_cmd->fallthrough();
  snoop_cmd->add_option("--tosses", tosses, "tosses per repetition (1..64)")
      ->required();
  snoop_cmd
      ->add_option("--threshold", snoop_threshold,
                   "stop when min(heads, tails) <= threshold")
      ->required();
  snoop_cmd->add_option("--seed", seed, "generator seed")->required();
  snoop_cmd->add_option("--max-reps", max_reps, "repetition cap")->required();
  snoop_cmd->callback([&] {
    SnoopingReport report =
        snooping_simulation(tosses, snoop_threshold, seed, max_reps);
    emit(to_json(report),
         "seed = " + std::to_string(report.seed) + "\n" +
             "repetitions run = " + std::to_string(report.repetitions_run) +
             "\n" + "triggered = " + (report.triggered ? "yes" : "no") + "\n" +
             "naive p = " + with_decimal(report.naive_p) + "\n" +
             "corrected p = " + with_decimal(report.corrected_p) + "\n");
  });

  try {
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
    return status;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::Success&) {
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (json_mode) {
      out << Json{{"error", e.code_name()}, {"message", e.what()}}.dump()
          << "\n";
    } else {
      err << "error: " << e.code_name() << ": " << e.what() << "\n";
    }
    return 1;
  }
}

}  // namespace pfunc
