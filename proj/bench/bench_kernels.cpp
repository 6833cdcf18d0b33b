// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "slopestab/batch.hpp"

using namespace slopestab;

namespace {

std::vector<ParsedScenario> make_batch(int count) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> dim(3, 8), deg(1, 8), vol(1, 500);
  std::vector<ParsedScenario> items;
  for (int i = 0; i < count; ++i) {
    ScenarioEntry e;
    e.name = "b" + std::to_string(i);
    e.curve = CurveScenario::fano(dim(rng), 0, deg(rng), vol(rng));
    const Rational cap = e.curve.normal_degree > 0
                             ? Rational((e.curve.n - 1) * e.curve.degree, e.curve.normal_degree)
                             : Rational(e.curve.n + 1);
    Rational eps = cap * Rational(i % 7 + 1, 7);
    if (e.curve.degree >= 3 && eps > Rational(e.curve.degree)) eps = Rational(e.curve.degree);
    e.seshadri = Surd(eps);
    items.emplace_back(std::move(e));
  }
  return items;
}

std::vector<Rational> make_grid(int count) {
  std::vector<Rational> grid;
  for (int k = 1; k <= count; ++k) grid.emplace_back(k, count / 3);
  return grid;
}

std::vector<OracleCase> make_oracle_cases(int count) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(3, 8), deg(1, 6), num(1, 40), den(1, 9);
  std::vector<OracleCase> cases;
  for (int i = 0; i < count; ++i) {
    const auto s = CurveScenario::fano(dim(rng), 0, deg(rng), Rational(num(rng), den(rng)));
    cases.push_back({s, Rational(num(rng), 10 * den(rng))});
  }
  return cases;
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto items = make_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch_serial(items, LambdaRange::Closed));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto items = make_batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(items, LambdaRange::Closed));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto s = CurveScenario::fano(3, 0, 1, 54);
  const auto grid = make_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(s, grid));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto s = CurveScenario::fano(3, 0, 1, 54);
  const auto grid = make_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(s, grid));
}

void BM_OracleSerial(benchmark::State& state) {
  const auto cases = make_oracle_cases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mismatches_serial(cases));
}

void BM_OracleParallel(benchmark::State& state) {
  const auto cases = make_oracle_cases(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mismatches(cases));
}

}  // namespace

BENCHMARK(BM_ClassifySerial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifyParallel)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleSerial)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
