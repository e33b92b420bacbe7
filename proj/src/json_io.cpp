#include "pfunc/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "pfunc/error.hpp"

namespace pfunc {

namespace {

[[noreturn]] void bad(const std::string& message) {
  raise(errc::parse_error, message);
}

const Json& field(const Json& j, const char* key, const char* context) {
  if (!j.is_object()) {
    bad(std::string(context) + ": expected a JSON object");
  }
  auto it = j.find(key);
  if (it == j.end()) {
    bad(std::string(context) + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string string_value(const Json& j, const char* context) {
  if (!j.is_string()) {
    bad(std::string(context) + ": expected a string");
  }
  return j.get<std::string>();
}

std::vector<std::string> string_array(const Json& j, const char* context) {
  if (!j.is_array()) {
    bad(std::string(context) + ": expected an array of strings");
  }
  std::vector<std::string> out;
  out.reserve(j.size());
  for (const auto& item : j) {
    out.push_back(string_value(item, context));
  }
  return out;
}

Event event_from_array(const Json& j, const char* context) {
  Event event;
  for (auto& id : string_array(j, context)) {
    event.insert(std::move(id));
  }
  return event;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_string()) {
    return Rational::parse(j.get<std::string>());
  }
  if (j.is_number_unsigned()) {
    return Rational(Integer(j.get<std::uint64_t>()));
  }
  if (j.is_number_integer()) {
    return Rational(Integer(j.get<std::int64_t>()));
  }
  bad("expected a rational as a string like \"3/8\" (floats are inexact)");
}

Integer integer_from_json(const Json& j) {
  Rational r = rational_from_json(j);
  if (!r.is_integer()) {
    bad("expected an integer, got " + r.str());
  }
  return r.numerator();
}

Json to_json(const Trial& trial) {
  Json outcomes = Json::array();
  for (const auto& outcome : trial.outcomes()) {
    outcomes.push_back({{"id", outcome.id}, {"p", outcome.p.str()}});
  }
  return Json{{"outcomes", std::move(outcomes)}};
}

Json to_json(const AggregatedTrial& trial) {
  Json classes = Json::array();
  for (const auto& cls : trial.classes()) {
    classes.push_back({{"id", cls.id},
                       {"size", cls.size.str()},
                       {"p", cls.per_element_probability.str()}});
  }
  return Json{{"classes", std::move(classes)}};
}

Json to_json(const TestOrder& order) {
  Json classes = Json::array();
  for (const auto& cls : order.classes()) {
    Json members = Json::array();
    for (const auto& id : cls) {
      members.push_back(id);
    }
    classes.push_back(std::move(members));
  }
  return Json{{"classes", std::move(classes)}};
}

Json to_json(const TestPyramid& pyramid) {
  Json events = Json::array();
  for (const auto& event : pyramid.events()) {
    events.push_back(to_json(event));
  }
  return Json{{"events", std::move(events)}};
}

Json to_json(const TestStatistic& statistic) {
  Json values = Json::object();
  for (const auto& [id, value] : statistic.values()) {
    values[id] = value.str();
  }
  return Json{{"values", std::move(values)}};
}

Json to_json(const Event& event) {
  Json out = Json::array();
  for (const auto& id : event) {
    out.push_back(id);
  }
  return out;
}

Json to_json(const PFunctionClassification& classification) {
  Json out{{"kind", p_kind_name(classification.kind)}};
  if (classification.witness) {
    out["witness"] = Json{{"epsilon", classification.witness->epsilon.str()},
                          {"tail", classification.witness->tail.str()}};
  }
  return out;
}

Json to_json(const SnoopingReport& report) {
  return Json{{"repetitions_run", report.repetitions_run},
              {"triggered", report.triggered},
              {"naive_p", report.naive_p.str()},
              {"corrected_p", report.corrected_p.str()},
              {"seed", report.seed}};
}

Trial trial_from_json(const Json& j) {
  const Json& outcomes = field(j, "outcomes", "trial");
  if (!outcomes.is_array()) {
    bad("trial: \"outcomes\" must be an array");
  }
  std::vector<OutcomeProb> parsed;
  parsed.reserve(outcomes.size());
  for (const auto& item : outcomes) {
    parsed.push_back({string_value(field(item, "id", "outcome"), "outcome id"),
                      rational_from_json(field(item, "p", "outcome"))});
  }
  return Trial(std::move(parsed));
}

AggregatedTrial aggregated_trial_from_json(const Json& j) {
  const Json& classes = field(j, "classes", "aggregated trial");
  if (!classes.is_array()) {
    bad("aggregated trial: \"classes\" must be an array");
  }
  std::vector<AggregatedClass> parsed;
  parsed.reserve(classes.size());
  for (const auto& item : classes) {
    parsed.push_back({string_value(field(item, "id", "class"), "class id"),
                      integer_from_json(field(item, "size", "class")),
                      rational_from_json(field(item, "p", "class"))});
  }
  return AggregatedTrial(std::move(parsed));
}

AnyTrial any_trial_from_json(const Json& j) {
  if (j.is_object() && j.contains("classes") && !j.contains("outcomes")) {
    return aggregated_trial_from_json(j);
  }
  return trial_from_json(j);
}

Trial tool_view(const AnyTrial& trial) {
  if (const auto* explicit_trial = std::get_if<Trial>(&trial)) {
    return *explicit_trial;
  }
  return std::get<AggregatedTrial>(trial).class_view();
}

TestOrder order_from_json(const Json& j) {
  const Json& classes = field(j, "classes", "test order");
  if (!classes.is_array()) {
    bad("test order: \"classes\" must be an array of arrays");
  }
  std::vector<std::set<std::string>> parsed;
  parsed.reserve(classes.size());
  for (const auto& cls : classes) {
    auto members = string_array(cls, "test order class");
    parsed.emplace_back(members.begin(), members.end());
  }
  return TestOrder(std::move(parsed));
}

TestPyramid pyramid_from_json(const Json& j) {
  const Json& events = field(j, "events", "test pyramid");
  if (!events.is_array()) {
    bad("test pyramid: \"events\" must be an array of arrays");
  }
  std::vector<Event> parsed;
  parsed.reserve(events.size());
  for (const auto& event : events) {
    parsed.push_back(event_from_array(event, "test pyramid event"));
  }
  return TestPyramid(std::move(parsed));
}

TestStatistic statistic_from_json(const Json& j) {
  const Json& values = field(j, "values", "test statistic");
  if (!values.is_object()) {
    bad("test statistic: \"values\" must be an object");
  }
  std::map<std::string, Rational> parsed;
  for (auto it = values.begin(); it != values.end(); ++it) {
    parsed.emplace(it.key(), rational_from_json(it.value()));
  }
  return TestStatistic(std::move(parsed));
}

Event event_from_json(const Json& j) {
  return event_from_array(j, "event");
}

LotterySpec lottery_spec_from_json(const Json& j) {
  LotterySpec spec;
  spec.organizer = string_value(field(j, "organizer", "lottery"), "organizer");

  const Json& participants = field(j, "participants", "lottery");
  if (!participants.is_array()) {
    bad("lottery: \"participants\" must be an array");
  }
  for (const auto& item : participants) {
    spec.participants.push_back(
        {string_value(field(item, "id", "participant"), "participant id"),
         integer_from_json(field(item, "tickets", "participant"))});
  }

  const Json& edges = field(j, "edges", "lottery");
  if (!edges.is_array()) {
    bad("lottery: \"edges\" must be an array of two-element arrays");
  }
  for (const auto& edge : edges) {
    auto pair = string_array(edge, "lottery edge");
    if (pair.size() != 2) {
      bad("lottery edge: expected exactly two endpoints");
    }
    spec.edges.emplace_back(std::move(pair[0]), std::move(pair[1]));
  }

  if (j.contains("cohorts")) {
    const Json& cohorts = j.at("cohorts");
    if (!cohorts.is_array()) {
      bad("lottery: \"cohorts\" must be an array");
    }
    for (const auto& item : cohorts) {
      spec.cohorts.push_back(
          {string_value(field(item, "id", "cohort"), "cohort id"),
           integer_from_json(field(item, "count", "cohort")),
           integer_from_json(field(item, "tickets_each", "cohort")),
           string_array(field(item, "attached_to", "cohort"),
                        "cohort attachment")});
    }
  }
  return spec;
}

PFunctionClassification classification_from_json(const Json& j) {
  std::string kind = string_value(field(j, "kind", "classification"), "kind");
  PFunctionClassification out;
  if (kind == "exact") {
    out.kind = PKind::exact_p_function;
  } else if (kind == "conservative") {
    out.kind = PKind::conservative_p_function;
  } else if (kind == "not-p-function") {
    out.kind = PKind::not_p_function;
  } else {
    bad("classification: unknown kind \"" + kind + "\"");
  }
  if (j.contains("witness")) {
    const Json& witness = j.at("witness");
    out.witness =
        PWitness{rational_from_json(field(witness, "epsilon", "witness")),
                 rational_from_json(field(witness, "tail", "witness"))};
  }
  return out;
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(where + ": " + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    bad("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

}  // namespace pfunc
