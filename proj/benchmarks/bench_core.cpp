#include <benchmark/benchmark.h>

#include "fucik/certify.hpp"
#include "fucik/eigenfunction.hpp"
#include "fucik/envelope.hpp"
#include "fucik/fourier.hpp"
#include "fucik/gram.hpp"

namespace {

void BM_EnvelopeE(benchmark::State& state) {
  double g = 5.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fucik::envelope_E(g).value);
    g = g < 8.5 ? g + 1e-3 : 5.0;
  }
}
BENCHMARK(BM_EnvelopeE);

void BM_RootOfE(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fucik::root_of_E());
}
BENCHMARK(BM_RootOfE);

void BM_QuadratureCoefficient(benchmark::State& state) {
  const auto p = fucik::gamma2_point(6.25);
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fucik::quadrature_coefficient(p, k));
}
BENCHMARK(BM_QuadratureCoefficient)->Arg(1)->Arg(8)->Arg(20);

void BM_BuildAndEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto p = fucik::point_on_curve(n, 1.3 * n * n);
  for (auto _ : state) {
    const auto f = fucik::build(p);
    double s = 0.0;
    for (int i = 0; i < 64; ++i) s += fucik::evaluate(f, 3.14159 * i / 64.0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_BuildAndEvaluate)->Arg(2)->Arg(16)->Arg(64);

void BM_GramMatrix(benchmark::State& state) {
  fucik::SystemSpec spec;
  for (int n = 2; n <= 16; n += 2) spec.entries[n] = fucik::point_on_curve(n, 1.25 * n * n);
  for (auto _ : state) benchmark::DoNotOptimize(fucik::gram_matrix(spec, 16, false).trace());
}
BENCHMARK(BM_GramMatrix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
