#ifndef PFUNC_JSON_IO_HPP
#define PFUNC_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <variant>

#include "pfunc/lottery.hpp"
#include "pfunc/p_function.hpp"
#include "pfunc/snooping.hpp"
#include "pfunc/test_tools.hpp"
#include "pfunc/trial.hpp"

namespace pfunc {

using Json = nlohmann::json;

// All on-disk numbers are strings so exactness survives serialization;
// rationals are "p/q" in lowest terms or "n" for integers. nlohmann keeps
// object keys sorted, which makes every dump canonical.

Json to_json(const Trial& trial);
Json to_json(const AggregatedTrial& trial);
Json to_json(const TestOrder& order);
Json to_json(const TestPyramid& pyramid);
Json to_json(const TestStatistic& statistic);
Json to_json(const Event& event);
Json to_json(const PFunctionClassification& classification);
Json to_json(const SnoopingReport& report);

Trial trial_from_json(const Json& j);
AggregatedTrial aggregated_trial_from_json(const Json& j);
TestOrder order_from_json(const Json& j);
TestPyramid pyramid_from_json(const Json& j);
TestStatistic statistic_from_json(const Json& j);
Event event_from_json(const Json& j);
LotterySpec lottery_spec_from_json(const Json& j);
PFunctionClassification classification_from_json(const Json& j);

/// A trial file holds either an explicit trial ("outcomes") or an
/// aggregated one ("classes").
using AnyTrial = std::variant<Trial, AggregatedTrial>;
AnyTrial any_trial_from_json(const Json& j);

/// The trial the test-tool operations run on: an explicit trial as is, an
/// aggregated trial at class granularity.
Trial tool_view(const AnyTrial& trial);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);

/// Parses text/file into JSON, converting syntax errors into ParseError.
Json parse_json_text(const std::string& text, const std::string& where);
Json load_json_file(const std::string& path);

}  // namespace pfunc

#endif  // PFUNC_JSON_IO_HPP
