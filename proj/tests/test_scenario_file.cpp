#include <doctest.h>

#include "oracles.hpp"
#include "slopestab/error.hpp"
#include "slopestab/scenario_file.hpp"

using namespace slopestab;
using nlohmann::json;

namespace {

std::string fixture(const char* name) { return std::string(SLOPESTAB_FIXTURE_DIR) + "/" + name; }

ScenarioEntry only_entry(const std::vector<ParsedScenario>& parsed) {
  REQUIRE(parsed.size() == 1);
  REQUIRE(std::holds_alternative<ScenarioEntry>(parsed[0]));
  return std::get<ScenarioEntry>(parsed[0]);
}

const ScenarioError& only_error(const std::string& text) {
  static std::vector<ParsedScenario> keep;
  keep = parse_scenario_text(text);
  REQUIRE(keep.size() == 1);
  REQUIRE(std::holds_alternative<ScenarioError>(keep[0]));
  return std::get<ScenarioError>(keep[0]);
}

}  // namespace

TEST_CASE("bundled fixtures parse") {
  const auto line = only_entry(load_scenario_file(fixture("pn_line.json")));
  CHECK(line.name == "line-in-P3");
  CHECK(line.curve.normal_degree == 2);
  CHECK(line.flags.is_projective_space);
  CHECK(*line.flags.fano_index == 4);
  CHECK(*evaluate_seshadri(line.seshadri, line.curve).value() == Surd(4));

  const auto fiber = only_entry(load_scenario_file(fixture("p1xpn.json")));
  CHECK(*evaluate_seshadri(fiber.seshadri, fiber.curve).value() == Surd(4));

  const auto blp3 = only_entry(load_scenario_file(fixture("blp3_fiber.json")));
  CHECK(blp3.curve.normal_degree == -1);
  CHECK(*evaluate_seshadri(blp3.seshadri, blp3.curve).value() == Surd(3));

  const auto gallery = load_scenario_file(fixture("gallery.json"));
  CHECK(gallery.size() == 9);
  for (const auto& item : gallery) CHECK(std::holds_alternative<ScenarioEntry>(item));
}

TEST_CASE("exact values, bounds and surds") {
  CHECK(parse_rational(json("7/21")) == Rational(1, 3));
  CHECK(parse_rational(json(5)) == Rational(5));
  CHECK_THROWS_AS(parse_rational(json(1.5)), Error);
  CHECK(parse_surd(json{{"rad", 8}}) == Surd::sqrt(8));
  CHECK(parse_surd(json{{"rat", "1/2"}, {"coef", -3}, {"rad", 5}}) == Surd(Rational(1, 2), Rational(-3), 5));
  CHECK(to_json(Surd::sqrt(8)) == json{{"rat", "0"}, {"coef", "2"}, {"rad", 2}});
  CHECK(to_json(Surd(Rational(3, 4))) == json("3/4"));
}

TEST_CASE("malformed scenarios are reported per entry") {
  const auto parsed = parse_scenario_text(R"([
    {"name": "ok", "n": 3, "degree": 1, "Ln": 54, "anticanonical": true, "seshadri": 3},
    {"name": "no-Ln", "n": 3, "degree": 1, "anticanonical": true, "seshadri": 3},
    {"name": "float", "n": 3, "degree": 1, "Ln": 54.5, "anticanonical": true, "seshadri": 3},
    {"name": "eps-too-big", "n": 3, "degree": 4, "Ln": 64, "anticanonical": true, "seshadri": 5},
    {"name": "bad-rule", "n": 3, "degree": 1, "Ln": 54, "anticanonical": true, "seshadri": {"rules": [{"rule": "nope"}]}},
    {"name": "no-KLn1", "n": 3, "degree": 1, "normalBundleDegree": 0, "Ln": 4, "seshadri": 1},
    {"name": "split-mismatch", "n": 3, "degree": 1, "Ln": 54, "anticanonical": true, "normalBundle": [0, 0], "seshadri": 1}
  ])");
  REQUIRE(parsed.size() == 7);
  CHECK(std::holds_alternative<ScenarioEntry>(parsed[0]));
  const std::vector<std::pair<std::string, ErrorKind>> expect{{"no-Ln", ErrorKind::ParseError},
                                                              {"float", ErrorKind::ParseError},
                                                              {"eps-too-big", ErrorKind::ScenarioInconsistent},
                                                              {"bad-rule", ErrorKind::ParseError},
                                                              {"no-KLn1", ErrorKind::ParseError},
                                                              {"split-mismatch", ErrorKind::ScenarioInconsistent}};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    const auto& err = std::get<ScenarioError>(parsed[i + 1]);
    CHECK(err.name == expect[i].first);
    CHECK(err.kind == expect[i].second);
  }
  CHECK(only_error(R"({"name": "n-too-small", "n": 1, "degree": 1, "Ln": 1, "anticanonical": true, "seshadri": 1})")
            .kind == ErrorKind::InvalidScenario);
  CHECK_THROWS_AS(parse_scenario_text("{not json"), Error);
  CHECK_THROWS_AS(parse_scenario_text("42"), Error);
}

TEST_CASE("rule lists combine certificates") {
  const auto s = CurveScenario::fano(3, 0, 4, 64);
  const json rules = json::parse(R"([
    {"rule": "witness_curve", "degree": 5},
    {"rule": "moving_curve"},
    {"rule": "min", "of": [[{"rule": "exact", "value": 4}], [{"rule": "exact", "value": 4}]]}
  ])");
  const auto e = evaluate_rules(rules, s);
  CHECK(*e.value() == Surd(4));
  const json nested = json::parse(R"([{"rule": "nested_restriction",
      "inner": [{"rule": "bounds", "lower": 1, "upper": 2}],
      "outer": [{"rule": "bounds", "lower": 3, "upper": 4}]}])");
  CHECK(evaluate_rules(nested, s).to_string() == "[1, 2]");
  const json shift = json::parse(R"([{"rule": "exceptional_shift", "of": [{"rule": "linear_subspace", "n": 3, "codim": 2}]}])");
  CHECK(*evaluate_rules(shift, s).value() == Surd(3));
  const json contradiction = json::parse(R"([{"rule": "contradiction",
      "witness": [{"rule": "proper_transform", "degree": 6, "multiplicity": 2}],
      "ambient": [{"rule": "exact", "value": 3}],
      "restricted": [{"rule": "quadric_surface_fiber", "alpha": 3}]}])");
  CHECK(*evaluate_rules(contradiction, s).value() == Surd(3));
  CHECK(*evaluate_rules(json::parse(R"([{"rule": "point_cap", "n": 4, "isPn": true}])"), s).value() == Surd(5));
}

TEST_CASE("serialization round trip is idempotent") {
  testing::ScenarioGen gen(501);
  std::vector<ScenarioEntry> entries;
  for (int i = 0; i < 120; ++i) {
    ScenarioEntry e;
    e.name = "s" + std::to_string(i);
    e.curve = (i % 2 == 0) ? gen.general() : gen.fano();
    const Rational eps = gen.epsilon(e.curve);
    switch (i % 4) {
      case 0: e.seshadri = Surd(eps); break;
      case 1: e.seshadri = SeshadriBounds{Surd(eps / Rational(2)), Surd(eps)}; break;
      case 2: e.seshadri = SeshadriBounds{Surd(0), std::nullopt}; break;
      default: e.seshadri = SeshadriRules{json::array({json{{"rule", "witness_curve"}, {"degree", eps.to_string()}}})};
    }
    e.flags.picard_rank_one = (i % 3 == 0);
    if (i % 5 == 0) e.flags.fano_index = 1;
    entries.push_back(e);
  }
  const json once = to_json(entries);
  const auto parsed = parse_scenarios(once);
  REQUIRE(parsed.size() == entries.size());
  std::vector<ScenarioEntry> back;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    REQUIRE(std::holds_alternative<ScenarioEntry>(parsed[i]));
    back.push_back(std::get<ScenarioEntry>(parsed[i]));
    CHECK(back.back() == entries[i]);
  }
  CHECK(to_json(back) == once);
  CHECK(json::parse(once.dump()) == once);
}
