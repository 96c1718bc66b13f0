#include <benchmark/benchmark.h>

#include "hyperdet/kaneko.hpp"
#include "hyperdet/selberg.hpp"
#include "hyperdet/tensor.hpp"

using namespace hyperdet;

namespace {

void BM_hankel_fast_factorial(benchmark::State& state) {
  const int n = int(state.range(0)), k = int(state.range(1));
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial),
                          size_t(2 * k * (n - 1)) + 1);
  for (auto _ : state) {
    Rat v = hankel_fast(c, n, k, 0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_hankel_fast_factorial)
    ->Args({3, 2})
    ->Args({4, 2})
    ->Args({5, 1})
    ->Args({5, 2})
    ->Unit(benchmark::kMillisecond);

void BM_det_even_naive(benchmark::State& state) {
  const int n = int(state.range(0)), k = int(state.range(1));
  auto c = family_moments(SequenceFamily::simple(FamilyTag::factorial),
                          size_t(2 * k * (n - 1)) + 1);
  auto A = hankel_tensor(c, n, 2 * k, 0);
  for (auto _ : state) {
    Rat v = det_even(A, k);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_det_even_naive)->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_hankel_fast_bell(benchmark::State& state) {
  const int n = int(state.range(0)), k = int(state.range(1));
  auto b = bell_polynomials(size_t(2 * k * (n - 1)) + 1);
  for (auto _ : state) {
    UniPoly v = hankel_fast(b, n, k, 0);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_hankel_fast_bell)->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_kaneko_lhs(benchmark::State& state) {
  const int n = int(state.range(0)), r = int(state.range(1));
  for (auto _ : state) {
    MultiPoly v = kaneko_lhs(n, r, Rat(1), Rat(2), 2, MeasureKind::jacobi);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_kaneko_lhs)->Args({2, 1})->Args({2, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
