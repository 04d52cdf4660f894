#include <benchmark/benchmark.h>

#include "hrep/models.hpp"
#include "hrep/rep_algebroid.hpp"
#include "hrep/rep_groupoid.hpp"
#include "hrep/van_est.hpp"
#include "hrep/suites/fixtures.hpp"

namespace {

using namespace hrep;
using namespace hrep::suites;

void BM_PolynomialProduct(benchmark::State& state) {
  Sampler s(1);
  const Polynomial a = s.polynomial(6, static_cast<int>(state.range(0)), 12);
  const Polynomial b = s.polynomial(6, static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(4);

void BM_DeltaPairGroupoid(benchmark::State& state) {
  const int arity = static_cast<int>(state.range(0));
  const Nerve n(FiniteGroupoid::pair(4), arity + 1);
  Sampler s(2);
  const FiniteCochain f = random_cochain(s, n, arity);
  for (auto _ : state) benchmark::DoNotOptimize(delta(n, f));
}
BENCHMARK(BM_DeltaPairGroupoid)->DenseRange(1, 4);

void BM_StarPairGroupoid(benchmark::State& state) {
  const Nerve n(FiniteGroupoid::pair(4), 4);
  Sampler s(3);
  const FiniteCochain eta = random_cochain(s, n, 2), f = random_cochain(s, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(star(n, eta, f));
}
BENCHMARK(BM_StarPairGroupoid);

void BM_DeformationCohomology(benchmark::State& state) {
  const AlgebroidModel a = state.range(0) == 0 ? models::sl2() : models::heisenberg();
  for (auto _ : state) benchmark::DoNotOptimize(deformation_cohomology(a, 0, 3));
}
BENCHMARK(BM_DeformationCohomology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CheckRepGGauged(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  const Nerve n(FiniteGroupoid::pair(4), bound);
  Sampler s(4);
  const RepG rep = gauge_transform(n, pair_rep(s, n), random_gauge(s, n), bound);
  for (auto _ : state) benchmark::DoNotOptimize(check_rep_G(n, rep, bound));
}
BENCHMARK(BM_CheckRepGGauged)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_CohomologyG(benchmark::State& state) {
  const Nerve n(FiniteGroupoid::pair(3), 5);
  Sampler s(5);
  const RepG rep = gauge_transform(n, pair_rep(s, n), random_gauge(s, n), 5);
  for (auto _ : state) benchmark::DoNotOptimize(cohomology_G(n, rep, 3));
}
BENCHMARK(BM_CohomologyG)->Unit(benchmark::kMillisecond);

void BM_PsiHeisenberg(benchmark::State& state) {
  const auto g = SmoothGroupoid::heisenberg();
  Sampler s(6);
  const SmoothCochain f = random_normalized(s, g, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Psi(g, f));
}
BENCHMARK(BM_PsiHeisenberg)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_AdEqualsAd(benchmark::State& state) {
  const auto g = SmoothGroupoid::pair_chart(2);
  Sampler s(7);
  const auto pts = s.points(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_Ad_equals_ad(g, planar_conn(), pts));
}
BENCHMARK(BM_AdEqualsAd)->Unit(benchmark::kMillisecond);

}  // namespace
