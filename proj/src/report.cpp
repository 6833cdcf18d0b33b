#include "slopestab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "slopestab/slope.hpp"

namespace slopestab {

using nlohmann::json;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string sign_text(int sign) { return sign > 0 ? "+" : (sign < 0 ? "-" : "0"); }

json estimate_json(const SeshadriEstimate& e) {
  json out{{"lower", to_json(e.lower())}};
  out["upper"] = e.upper() ? to_json(*e.upper()) : json(nullptr);
  out["exact"] = e.is_exact();
  json steps = json::array();
  for (const auto& p : e.provenance()) steps.push_back({{"rule", p.rule}, {"statement", p.statement}});
  out["provenance"] = std::move(steps);
  return out;
}

void text_provenance(std::ostream& os, const SeshadriEstimate& e, const std::string& indent) {
  int i = 1;
  for (const auto& p : e.provenance()) os << indent << i++ << ". " << p.rule << ": " << p.statement << "\n";
}

const ScenarioEntry& pick_scenario(const std::vector<ParsedScenario>& parsed, const std::string& name) {
  const ScenarioError* failure = nullptr;
  const ScenarioEntry* only = nullptr;
  std::size_t count = 0;
  for (const auto& item : parsed) {
    ++count;
    if (const auto* e = std::get_if<ScenarioEntry>(&item)) {
      only = e;
      if (e->name == name) return *e;
    } else if (std::get<ScenarioError>(item).name == name) {
      failure = &std::get<ScenarioError>(item);
    }
  }
  if (failure) throw Error(failure->kind, failure->message);
  if (name.empty() && count == 1 && only) return *only;
  throw Error(ErrorKind::UnknownScenario, name.empty() ? "--scenario is required when the file holds several scenarios"
                                                       : "no scenario named '" + name + "'");
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw Error(ErrorKind::ParseError, "unknown format '" + std::string(text) + "' (text|csv|json)");
}

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  while (!text.empty()) {
    const auto comma = text.find(',');
    grid.push_back(Rational::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (grid.empty()) throw Error(ErrorKind::GridOutOfRange, "empty lambda grid");
  return grid;
}

void check_grid(std::span<const Rational> grid, const SeshadriEstimate& e, LambdaRange range) {
  for (const auto& lambda : grid) {
    const Surd l(lambda);
    bool inside = lambda.sign() > 0;
    if (inside && e.upper()) inside = range == LambdaRange::Closed ? !(*e.upper() < l) : l < *e.upper();
    if (!inside) {
      throw Error(ErrorKind::GridOutOfRange, "lambda = " + lambda.to_string() + " is outside " +
                                                 std::string(range == LambdaRange::Closed ? "(0, eps]" : "(0, eps)") +
                                                 " with eps " + e.to_string());
    }
  }
}

std::string render_classify(std::span<const ClassifyOutcome> outcomes, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json list = json::array();
    for (const auto& o : outcomes) {
      json item{{"name", o.name}};
      if (!o.curve.empty()) item["curve"] = o.curve;
      if (o.estimate) item["seshadri"] = estimate_json(*o.estimate);
      if (o.verdict) {
        item["status"] = to_string(o.verdict->status);
        item["witness"] = o.verdict->witness ? to_json(*o.verdict->witness) : json(nullptr);
        item["rule"] = o.verdict->rule;
        item["condition"] = o.verdict->condition ? json(*o.verdict->condition) : json(nullptr);
      }
      if (o.error_kind) item["error"] = {{"kind", to_string(*o.error_kind)}, {"message", o.error_message}};
      list.push_back(std::move(item));
    }
    os << list.dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    os << "name,status,witness,seshadri,rule,condition,error\n";
    for (const auto& o : outcomes) {
      os << csv_field(o.name) << ",";
      if (o.verdict) {
        os << to_string(o.verdict->status) << "," << (o.verdict->witness ? csv_field(o.verdict->witness->to_string()) : "")
           << "," << csv_field(o.estimate ? o.estimate->to_string() : "") << "," << csv_field(o.verdict->rule) << ","
           << csv_field(o.verdict->condition.value_or("")) << ",";
      } else {
        os << "ERROR,,,,,";
      }
      os << (o.error_kind ? csv_field(o.error_message) : "") << "\n";
    }
    return os.str();
  }
  for (const auto& o : outcomes) {
    os << "scenario: " << o.name << "\n";
    if (!o.curve.empty()) os << "  curve: " << o.curve << "\n";
    if (o.estimate) {
      os << "  seshadri: " << o.estimate->to_string() << "\n";
      text_provenance(os, *o.estimate, "    ");
    }
    if (o.verdict) {
      os << "  status: " << to_string(o.verdict->status) << "\n";
      if (o.verdict->witness) {
        os << "  witness: lambda = " << o.verdict->witness->to_string();
        if (!o.verdict->witness->is_rational()) os << " (~" << o.verdict->witness->to_decimal() << ")";
        os << "\n";
      }
      os << "  rule: " << o.verdict->rule << "\n";
      if (o.verdict->condition) os << "  condition: " << *o.verdict->condition << "\n";
    }
    if (o.error_kind) os << "  error: " << o.error_message << "\n";
  }
  return os.str();
}

std::string render_sweep(std::span<const SweepRow> rows, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"lambda", r.lambda.to_string()},
                      {"mu_lambda", r.mu_lambda.to_string()},
                      {"mu_lambda_decimal", r.mu_lambda.to_decimal(6)},
                      {"f_lambda", r.f.to_string()},
                      {"sign", sign_text(r.sign)}});
    }
    os << list.dump(2) << "\n";
    return os.str();
  }
  if (format == Format::Csv) {
    os << kSweepHeader << "\n";
    for (const auto& r : rows) {
      os << r.lambda.to_string() << "," << r.mu_lambda.to_string() << "," << r.mu_lambda.to_decimal(6) << ","
         << r.f.to_string() << "," << sign_text(r.sign) << "\n";
    }
    return os.str();
  }
  // text: same columns, padded
  std::vector<std::vector<std::string>> table{{"lambda", "mu_lambda", "mu_lambda_decimal", "f_lambda", "sign"}};
  for (const auto& r : rows) {
    table.push_back({r.lambda.to_string(), r.mu_lambda.to_string(), r.mu_lambda.to_decimal(6), r.f.to_string(),
                     sign_text(r.sign)});
  }
  std::vector<std::size_t> width(5, 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string render_seshadri(const std::string& name, const SeshadriEstimate& e, Format format) {
  std::ostringstream os;
  if (format == Format::Json) {
    json out = estimate_json(e);
    out["name"] = name;
    os << out.dump(2) << "\n";
  } else if (format == Format::Csv) {
    os << "step,rule,statement\n";
    int i = 1;
    for (const auto& p : e.provenance()) os << i++ << "," << csv_field(p.rule) << "," << csv_field(p.statement) << "\n";
  } else {
    os << "scenario: " << name << "\n";
    os << "seshadri: " << e.to_string() << "\n";
    text_provenance(os, e, "  ");
  }
  return os.str();
}

int exit_code(std::span<const ClassifyOutcome> outcomes) {
  int code = 0;
  for (const auto& o : outcomes) {
    if (!o.error_kind) continue;
    if (*o.error_kind == ErrorKind::InvariantViolation) return 2;
    code = 1;
  }
  return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slope stability of polarized manifolds with respect to smooth curves"};
  app.require_subcommand(1);
  app.fallthrough();

  bool open_interval = false;
  std::string format_text = "text";
  app.add_flag("--open-interval", open_interval, "exclude lambda = eps from the stability test");
  app.add_option("--format", format_text, "output format")->check(CLI::IsMember({"text", "csv", "json"}));

  std::string file;
  std::string scenario;
  std::string grid_text;

  CLI::App* classify = app.add_subcommand("classify", "verdict for every scenario in a file");
  classify->add_option("file", file, "scenario file (JSON)")->required();

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "tabulate mu_lambda and f(lambda) over a grid");
  sweep_cmd->add_option("file", file, "scenario file (JSON)")->required();
  sweep_cmd->add_option("--scenario", scenario, "scenario name");
  sweep_cmd->add_option("--grid", grid_text, "comma-separated rationals, e.g. 1,3/2,2")->required();

  CLI::App* seshadri_cmd = app.add_subcommand("seshadri", "print the Seshadri certificate of a scenario");
  seshadri_cmd->add_option("file", file, "scenario file (JSON)")->required();
  seshadri_cmd->add_option("--scenario", scenario, "scenario name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 1;
  }

  const LambdaRange range = open_interval ? LambdaRange::Open : LambdaRange::Closed;
  try {
    const std::vector<ParsedScenario> parsed = load_scenario_file(file);
    if (classify->parsed()) {
      const auto outcomes = classify_batch(parsed, range);
      out << render_classify(outcomes, parse_format(format_text));
      for (const auto& o : outcomes) {
        if (o.error_kind) err << o.name << ": " << o.error_message << "\n";
      }
      return exit_code(outcomes);
    }
    const ScenarioEntry& entry = pick_scenario(parsed, scenario);
    const SeshadriEstimate estimate = evaluate_seshadri(entry.seshadri, entry.curve);
    if (seshadri_cmd->parsed()) {
      out << render_seshadri(entry.name, estimate, parse_format(format_text));
      return 0;
    }
    const std::vector<Rational> grid = parse_grid(grid_text);
    check_grid(grid, estimate, range);
    const Format format = app.count("--format") > 0 ? parse_format(format_text) : Format::Csv;
    out << render_sweep(sweep(entry.curve, grid), format);
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? 2 : 1;
  }
}

}  // namespace slopestab
