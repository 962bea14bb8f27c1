#include <benchmark/benchmark.h>

#include <random>

#include "qci/curve.hpp"
#include "qci/matrix.hpp"
#include "qci/qci.hpp"

namespace {

const qci::PrimeField kField(32003);

qci::DenseMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<qci::Scalar> coeff(0, kField.prime() - 1);
  qci::DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = coeff(rng);
  return m;
}

void BM_Rank(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qci::rank(kField, m));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_AnalyzeSmoothPlusLine(benchmark::State& state) {
  const auto curve = qci::family::smooth_plus_line(kField, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qci::analyze_curve(curve));
}
BENCHMARK(BM_AnalyzeSmoothPlusLine)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_AnalyzeLines(benchmark::State& state) {
  const auto curve = qci::family::lines_through_point(kField, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(qci::analyze_curve(curve));
}
BENCHMARK(BM_AnalyzeLines)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_NeverSplits(benchmark::State& state) {
  const auto x = qci::variable(kField, 0), y = qci::variable(kField, 1), z = qci::variable(kField, 2);
  const auto q = qci::QciInput::make({x, qci::multiply(y, y), qci::multiply(y, z)});
  for (auto _ : state) benchmark::DoNotOptimize(qci::analyze_qci(q));
}
BENCHMARK(BM_NeverSplits);

}  // namespace

BENCHMARK_MAIN();
