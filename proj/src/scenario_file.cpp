#include "slopestab/scenario_file.hpp"

#include <fstream>
#include <sstream>

#include "slopestab/intersection.hpp"

namespace slopestab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorKind::ParseError, message); }

const json& require(const json& object, const char* key) {
  if (!object.contains(key)) fail(std::string("missing field '") + key + "'");
  return object.at(key);
}

std::int64_t parse_int(const json& value, const char* what) {
  if (!value.is_number_integer()) fail(std::string(what) + " must be an integer, got " + value.dump());
  return value.get<std::int64_t>();
}

bool parse_bool(const json& value, const char* what) {
  if (!value.is_boolean()) fail(std::string(what) + " must be true or false, got " + value.dump());
  return value.get<bool>();
}

SeshadriSpec parse_seshadri(const json& value) {
  if (!value.is_object() || value.contains("rat")) return parse_surd(value);
  if (value.contains("exact")) return parse_surd(value.at("exact"));
  if (value.contains("rules")) {
    const json& rules = value.at("rules");
    if (!rules.is_array() || rules.empty()) fail("seshadri.rules must be a non-empty array");
    return SeshadriRules{rules};
  }
  if (value.contains("lower") || value.contains("upper")) {
    SeshadriBounds b;
    if (value.contains("lower")) b.lower = parse_surd(value.at("lower"));
    if (value.contains("upper") && !value.at("upper").is_null()) b.upper = parse_surd(value.at("upper"));
    return b;
  }
  fail("seshadri must be a value, {exact}, {lower, upper} or {rules}");
}

json seshadri_to_json(const SeshadriSpec& spec) {
  if (const auto* exact = std::get_if<Surd>(&spec)) return json{{"exact", to_json(*exact)}};
  if (const auto* b = std::get_if<SeshadriBounds>(&spec)) {
    json out{{"lower", to_json(b->lower)}};
    out["upper"] = b->upper ? to_json(*b->upper) : json(nullptr);
    return out;
  }
  return json{{"rules", std::get<SeshadriRules>(spec).rules}};
}

const json& rule_list(const json& rule, const char* key) {
  const json& list = require(rule, key);
  if (!list.is_array() || list.empty()) fail(std::string("rule field '") + key + "' must be a non-empty rule list");
  return list;
}

SeshadriEstimate evaluate_rule(const json& rule, const CurveScenario& curve) {
  if (!rule.is_object()) fail("each rule must be an object, got " + rule.dump());
  const std::string name = require(rule, "rule").get<std::string>();
  if (name == "exact") {
    return SeshadriEstimate::exact(parse_surd(require(rule, "value")), {"given", "eps supplied as exact"});
  }
  if (name == "bounds") {
    Surd lower = rule.contains("lower") ? parse_surd(rule.at("lower")) : Surd(0);
    std::optional<Surd> upper;
    if (rule.contains("upper") && !rule.at("upper").is_null()) upper = parse_surd(rule.at("upper"));
    return SeshadriEstimate(std::move(lower), std::move(upper), {{"given", "eps bounds supplied"}});
  }
  if (name == "linear_subspace") {
    const auto n = static_cast<int>(parse_int(require(rule, "n"), "n"));
    const auto codim = rule.contains("codim") ? static_cast<int>(parse_int(rule.at("codim"), "codim")) : 1;
    return linear_subspace_exact(n, codim);
  }
  if (name == "witness_curve") return witness_curve_upper(parse_rational(require(rule, "degree")));
  if (name == "proper_transform") {
    return proper_transform_upper(parse_rational(require(rule, "degree")),
                                  parse_rational(require(rule, "multiplicity")));
  }
  if (name == "moving_curve") return moving_curve_upper(curve);
  if (name == "point_cap") {
    return point_seshadri_cap(static_cast<int>(parse_int(require(rule, "n"), "n")),
                              parse_bool(require(rule, "isPn"), "isPn"));
  }
  if (name == "quadric_surface_fiber") return quadric_surface_fiber(parse_rational(require(rule, "alpha")));
  if (name == "product_fiber") return product_fiber_estimate(evaluate_rules(rule_list(rule, "of"), curve));
  if (name == "exceptional_shift") return blowup_exceptional_shift(evaluate_rules(rule_list(rule, "of"), curve));
  if (name == "min") {
    const json& parts = rule_list(rule, "of");
    if (parts.size() != 2) fail("rule 'min' takes exactly two rule lists");
    return min_combination_lower(evaluate_rules(parts[0], curve), evaluate_rules(parts[1], curve));
  }
  if (name == "nested_restriction") {
    return nested_restriction(evaluate_rules(rule_list(rule, "inner"), curve),
                              evaluate_rules(rule_list(rule, "outer"), curve));
  }
  if (name == "contradiction") {
    return contradiction_certificate(evaluate_rules(rule_list(rule, "witness"), curve),
                                     evaluate_rules(rule_list(rule, "ambient"), curve),
                                     evaluate_rules(rule_list(rule, "restricted"), curve));
  }
  if (name == "blowup_line_fiber") return blowup_line_fiber_certificate();
  fail("unknown Seshadri rule '" + name + "'");
}

std::vector<ParsedScenario> parse_list(const json& list) {
  std::vector<ParsedScenario> out;
  out.reserve(list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& item = list[i];
    std::string name = "#" + std::to_string(i);
    if (item.is_object() && item.contains("name") && item.at("name").is_string()) {
      name = item.at("name").get<std::string>();
    }
    try {
      out.emplace_back(parse_scenario(item));
    } catch (const Error& e) {
      out.emplace_back(ScenarioError{name, e.kind(), e.what()});
    } catch (const json::exception& e) {
      out.emplace_back(ScenarioError{name, ErrorKind::ParseError, e.what()});
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) return Rational::parse(value.get<std::string>());
  fail("expected an exact rational (integer or \"a/b\" string), got " + value.dump());
}

Surd parse_surd(const json& value) {
  if (!value.is_object()) return Surd(parse_rational(value));
  const Rational rat = value.contains("rat") ? parse_rational(value.at("rat")) : Rational(0);
  const Rational coef = value.contains("coef") ? parse_rational(value.at("coef")) : Rational(1);
  const json& rad = require(value, "rad");
  if (!rad.is_number_integer() || rad.get<std::int64_t>() < 0) fail("surd radicand must be a non-negative integer");
  return Surd(rat, coef, mpz_class(static_cast<long>(rad.get<std::int64_t>())));
}

json to_json(const Rational& value) { return value.to_string(); }

json to_json(const Surd& value) {
  if (value.is_rational()) return to_json(value.rational_part());
  return json{{"rat", to_json(value.rational_part())},
              {"coef", to_json(value.coefficient())},
              {"rad", std::stoll(value.radicand().get_str())}};
}

ScenarioEntry parse_scenario(const json& object) {
  if (!object.is_object()) fail("scenario must be an object");
  ScenarioEntry entry;
  const json& name = require(object, "name");
  if (!name.is_string() || name.get<std::string>().empty()) fail("scenario name must be a non-empty string");
  entry.name = name.get<std::string>();

  CurveScenario& c = entry.curve;
  c.n = static_cast<int>(parse_int(require(object, "n"), "n"));
  c.genus = object.contains("genus") ? static_cast<int>(parse_int(object.at("genus"), "genus")) : 0;
  c.degree = parse_int(require(object, "degree"), "degree");
  c.top_self_intersection = parse_rational(require(object, "Ln"));
  c.anticanonical = object.contains("anticanonical") && parse_bool(object.at("anticanonical"), "anticanonical");

  if (object.contains("normalBundle")) {
    const json& twists = object.at("normalBundle");
    if (!twists.is_array()) fail("normalBundle must be an array of integers");
    std::vector<std::int64_t> values;
    for (const json& t : twists) values.push_back(parse_int(t, "normalBundle entry"));
    entry.flags.normal_bundle = BundleSplitting(std::move(values));
  }

  std::optional<std::int64_t> normal_degree;
  if (object.contains("normalBundleDegree")) normal_degree = parse_int(object.at("normalBundleDegree"), "normalBundleDegree");
  if (entry.flags.normal_bundle) {
    const std::int64_t from_split = entry.flags.normal_bundle->degree();
    if (normal_degree && *normal_degree != from_split) {
      throw Error(ErrorKind::ScenarioInconsistent, "normalBundleDegree disagrees with the degree of normalBundle");
    }
    normal_degree = from_split;
  }
  if (c.anticanonical) {
    if (!normal_degree) normal_degree = c.degree + 2 * c.genus - 2;
    c.canonical_mixed = object.contains("KLn1") ? parse_rational(object.at("KLn1")) : -c.top_self_intersection;
  } else {
    if (!object.contains("KLn1")) fail("KLn1 is required unless anticanonical is true");
    c.canonical_mixed = parse_rational(object.at("KLn1"));
    if (!normal_degree) fail("normalBundleDegree (or normalBundle) is required unless anticanonical is true");
  }
  c.normal_degree = *normal_degree;
  c.validate();

  entry.seshadri = parse_seshadri(require(object, "seshadri"));

  if (object.contains("flags")) {
    const json& flags = object.at("flags");
    if (!flags.is_object()) fail("flags must be an object");
    if (flags.contains("isPn")) entry.flags.is_projective_space = parse_bool(flags.at("isPn"), "isPn");
    if (flags.contains("picardRankOne")) {
      entry.flags.picard_rank_one = parse_bool(flags.at("picardRankOne"), "picardRankOne");
    }
    if (flags.contains("fanoIndex") && !flags.at("fanoIndex").is_null()) {
      entry.flags.fano_index = static_cast<int>(parse_int(flags.at("fanoIndex"), "fanoIndex"));
    }
  }

  // every check that does not need a verdict runs up front
  const SeshadriEstimate estimate = evaluate_seshadri(entry.seshadri, c);
  require_consistent_epsilon(c, estimate.lower());
  return entry;
}

std::vector<ParsedScenario> parse_scenarios(const json& document) {
  if (document.is_array()) return parse_list(document);
  if (document.is_object() && document.contains("scenarios")) {
    const json& list = document.at("scenarios");
    if (!list.is_array()) fail("'scenarios' must be an array");
    return parse_list(list);
  }
  if (document.is_object()) return parse_list(json::array({document}));
  fail("scenario document must be an object or an array");
}

std::vector<ParsedScenario> parse_scenario_text(const std::string& text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  return parse_scenarios(document);
}

std::vector<ParsedScenario> load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open scenario file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

json to_json(const ScenarioEntry& entry) {
  const CurveScenario& c = entry.curve;
  json out{{"name", entry.name},
           {"n", c.n},
           {"genus", c.genus},
           {"degree", c.degree},
           {"normalBundleDegree", c.normal_degree},
           {"Ln", to_json(c.top_self_intersection)},
           {"anticanonical", c.anticanonical}};
  if (!c.anticanonical) out["KLn1"] = to_json(c.canonical_mixed);
  if (entry.flags.normal_bundle) out["normalBundle"] = entry.flags.normal_bundle->twists();
  out["seshadri"] = seshadri_to_json(entry.seshadri);
  json flags{{"isPn", entry.flags.is_projective_space}, {"picardRankOne", entry.flags.picard_rank_one}};
  flags["fanoIndex"] = entry.flags.fano_index ? json(*entry.flags.fano_index) : json(nullptr);
  out["flags"] = std::move(flags);
  return out;
}

json to_json(const std::vector<ScenarioEntry>& entries) {
  json list = json::array();
  for (const auto& e : entries) list.push_back(to_json(e));
  return json{{"scenarios", std::move(list)}};
}

SeshadriEstimate evaluate_seshadri(const SeshadriSpec& spec, const CurveScenario& curve) {
  if (const auto* exact = std::get_if<Surd>(&spec)) {
    return SeshadriEstimate::exact(*exact, {"given", "eps supplied as exact"});
  }
  if (const auto* b = std::get_if<SeshadriBounds>(&spec)) {
    return SeshadriEstimate(b->lower, b->upper, {{"given", "eps bounds supplied"}});
  }
  return evaluate_rules(std::get<SeshadriRules>(spec).rules, curve);
}

SeshadriEstimate evaluate_rules(const json& rules, const CurveScenario& curve) {
  if (!rules.is_array() || rules.empty()) fail("a rule list must be a non-empty array");
  SeshadriEstimate acc = evaluate_rule(rules[0], curve);
  for (std::size_t i = 1; i < rules.size(); ++i) acc = combine(acc, evaluate_rule(rules[i], curve));
  return acc;
}

}  // namespace slopestab
