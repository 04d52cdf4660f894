#include <benchmark/benchmark.h>

#include "hrep/jet.hpp"

namespace {

void BM_JetProduct(benchmark::State& state) {
  const int gens = static_cast<int>(state.range(0));
  hrep::JetScalar a(1), b(2);
  for (int g = 0; g < gens; ++g) {
    a += hrep::JetScalar::generator(g) * hrep::Rational(g + 1);
    b += hrep::JetScalar::generator(g) * hrep::Rational(1, g + 2);
  }
  for (int g = 0; g + 1 < gens; ++g) a *= hrep::JetScalar(1) + hrep::JetScalar::generator(g);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_JetProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_ExpNilpotent(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  hrep::JetMatrix<hrep::Rational> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = hrep::JetScalar::generator(static_cast<int>((r + c) % 3)) * hrep::Rational(int(r) - int(c));
  for (auto _ : state) benchmark::DoNotOptimize(hrep::exp_nilpotent(m));
}
BENCHMARK(BM_ExpNilpotent)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
