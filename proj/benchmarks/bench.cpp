#include <benchmark/benchmark.h>

#include "kronecker.hpp"
#include "mbgram/chebyshev.hpp"
#include "mbgram/determinant.hpp"
#include "mbgram/gram.hpp"

using namespace mbgram;

namespace {

std::vector<mpz_class> chebyshev_coefficients(long n) { return cheb_T(n).to_dense(Variable::d); }

void BM_Schoolbook(benchmark::State& state) {
  const auto a = chebyshev_coefficients(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detail::schoolbook_multiply(a, a));
}

void BM_Kronecker(benchmark::State& state) {
  const auto a = chebyshev_coefficients(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(detail::kronecker_multiply(a, a));
}

void BM_ChebyshevFresh(benchmark::State& state) {
  for (auto _ : state) {
    ChebyshevTable table(state.range(0), state.range(0));
    benchmark::DoNotOptimize(table.S(state.range(0)));
  }
}

void BM_AssembleTilde(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(assemble_gram(static_cast<int>(state.range(0)), GramVariant::Mbn1Tilde));
}

void BM_TildeDeterminant(benchmark::State& state, DetBackend backend) {
  const GramMatrix g = assemble_gram(static_cast<int>(state.range(0)), GramVariant::Mbn1Tilde);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(g.entries, {backend, 1, {}}).value);
}

}  // namespace

BENCHMARK(BM_Schoolbook)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_Kronecker)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_ChebyshevFresh)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssembleTilde)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TildeDeterminant, bareiss, DetBackend::Bareiss)
    ->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TildeDeterminant, interp, DetBackend::Interpolation)
    ->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TildeDeterminant, modular, DetBackend::Modular)
    ->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
