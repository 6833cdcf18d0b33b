#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slopestab/classify.hpp"
#include "slopestab/error.hpp"
#include "slopestab/scenario.hpp"
#include "slopestab/seshadri.hpp"

namespace slopestab {

// Scenario files are JSON. Exact numbers are strings "a/b" (or JSON integers);
// surds are {"rat": "a/b", "coef": "c/d", "rad": k}. The "seshadri" field is one of
//   {"exact": v} | {"lower": v, "upper": v} | {"rules": [rule, ...]}
// where each rule is an object with a "rule" key naming a certificate step
// (see evaluate_rules). Floating-point JSON numbers are rejected.

struct SeshadriBounds {
  Surd lower;
  std::optional<Surd> upper;
  bool operator==(const SeshadriBounds&) const = default;
};

struct SeshadriRules {
  nlohmann::json rules;  // array
  bool operator==(const SeshadriRules&) const = default;
};

using SeshadriSpec = std::variant<Surd, SeshadriBounds, SeshadriRules>;

struct ScenarioEntry {
  std::string name;
  CurveScenario curve;
  SeshadriSpec seshadri;
  ClassifyFlags flags;

  bool operator==(const ScenarioEntry&) const = default;
};

struct ScenarioError {
  std::string name;
  ErrorKind kind;
  std::string message;
};

using ParsedScenario = std::variant<ScenarioEntry, ScenarioError>;

/// Parses a whole file. Malformed scenarios become ScenarioError entries so one
/// bad scenario does not hide the rest; a malformed document throws ParseError.
std::vector<ParsedScenario> parse_scenarios(const nlohmann::json& document);
std::vector<ParsedScenario> parse_scenario_text(const std::string& text);
std::vector<ParsedScenario> load_scenario_file(const std::string& path);

ScenarioEntry parse_scenario(const nlohmann::json& object);

nlohmann::json to_json(const ScenarioEntry& entry);
nlohmann::json to_json(const std::vector<ScenarioEntry>& entries);

Rational parse_rational(const nlohmann::json& value);
Surd parse_surd(const nlohmann::json& value);
nlohmann::json to_json(const Rational& value);
nlohmann::json to_json(const Surd& value);

/// Builds the certified estimate for a scenario's "seshadri" field.
SeshadriEstimate evaluate_seshadri(const SeshadriSpec& spec, const CurveScenario& curve);
SeshadriEstimate evaluate_rules(const nlohmann::json& rules, const CurveScenario& curve);

}  // namespace slopestab
