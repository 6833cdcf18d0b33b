#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slopestab/batch.hpp"

namespace slopestab {

enum class Format { Text, Csv, Json };

Format parse_format(std::string_view text);

/// "1,2,5/2" -> {1, 2, 5/2}.
std::vector<Rational> parse_grid(std::string_view text);

/// Every lambda must lie in (0, eps] (or (0, eps) for the open range).
void check_grid(std::span<const Rational> grid, const SeshadriEstimate& e, LambdaRange range);

inline constexpr std::string_view kSweepHeader = "lambda,mu_lambda,mu_lambda_decimal,f_lambda,sign";

std::string render_classify(std::span<const ClassifyOutcome> outcomes, Format format);
std::string render_sweep(std::span<const SweepRow> rows, Format format);
std::string render_seshadri(const std::string& name, const SeshadriEstimate& e, Format format);

/// 0 when every scenario produced a verdict, 2 if any internal invariant
/// failed, 1 otherwise.
int exit_code(std::span<const ClassifyOutcome> outcomes);

/// Full command-line entry point: classify | sweep | seshadri.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace slopestab
