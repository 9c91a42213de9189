#include <benchmark/benchmark.h>

#include "lauricella/lauricella.hpp"

namespace {

using namespace lauricella;

ParamPoint sample(int m) { return sample_generic(7, m, 12); }

void BM_DeterminantLambda0(benchmark::State& state) {
  const ParamPoint p = sample(static_cast<int>(state.range(0)));
  const Matrix l0 = lambda0_matrix(p).entries;
  for (auto _ : state) benchmark::DoNotOptimize(det_bruteforce(l0));
}
BENCHMARK(BM_DeterminantLambda0)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DeterminantClosedForm(benchmark::State& state) {
  const ParamPoint p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_lambda0_closed(p));
}
BENCHMARK(BM_DeterminantClosedForm)->DenseRange(2, 5);

void BM_M0Matrix(benchmark::State& state) {
  const ParamPoint p = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(m_0_matrix(p));
}
BENCHMARK(BM_M0Matrix)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);

void BM_InfinityWord(benchmark::State& state) {
  const ParamPoint p = sample(static_cast<int>(state.range(0)));
  const GeneratorWord w = rho_infinity_word(p.m);
  for (auto _ : state) benchmark::DoNotOptimize(word_matrix(p, w));
}
BENCHMARK(BM_InfinityWord)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Relations(benchmark::State& state) {
  const ParamPoint p = sample(static_cast<int>(state.range(0)));
  VerifyOptions opts;
  opts.kernel_samples = 5;
  for (auto _ : state) benchmark::DoNotOptimize(verify_relations(p, opts));
}
BENCHMARK(BM_Relations)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SeriesCoefficients(benchmark::State& state) {
  const SeriesParams sp(Scalar::rational(1, 3), Scalar::rational(1, 5),
                        {Scalar::rational(1, 7), Scalar::rational(2, 9)});
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc_coefficients(sp, order));
}
BENCHMARK(BM_SeriesCoefficients)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SeriesEval(benchmark::State& state) {
  const SeriesParams sp(Scalar::rational(1, 3), Scalar::rational(1, 5),
                        {Scalar::rational(1, 7), Scalar::rational(2, 9)});
  const std::vector<Scalar> x{Scalar::rational(1, 20), Scalar::rational(1, 30)};
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fc_eval(sp, x, order, 128));
}
BENCHMARK(BM_SeriesEval)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
