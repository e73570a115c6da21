#include <benchmark/benchmark.h>

#include <random>

#include "bundlelab/calabi.hpp"
#include "bundlelab/hermitian_checks.hpp"
#include "bundlelab/holo.hpp"
#include "bundlelab/metric.hpp"

using namespace bundlelab;

static void BM_ReduceTau(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> re(-10, 10), im(1e-3, 10);
  std::vector<Tau> taus;
  for (int i = 0; i < 1024; ++i) taus.emplace_back(re(rng), im(rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_tau(taus[i++ & 1023]));
}
BENCHMARK(BM_ReduceTau);

static void BM_BasisTypeIII(benchmark::State& state) {
  const Tau t(0.1, 1.1);
  const AnglePair th{AngleParam::rational(1, 4), AngleParam::rational(1, 3)};
  for (auto _ : state)
    benchmark::DoNotOptimize(basis_typeIII(th[0], th[1], cplx(0.3, 0.2), cplx(0.3, 0.2) * t.value(), t,
                                           static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BasisTypeIII)->Arg(4)->Arg(16)->Arg(64);

static void BM_GauduchonDefect(benchmark::State& state) {
  const Tau t(0, 1);
  const MetricField g = build_gaugenspe({AngleParam::zero(), AngleParam::zero()}, t);
  const auto pts = sample_points(3, t, 64, 5);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gauduchon_defect(g, pts[i++ & 63]));
}
BENCHMARK(BM_GauduchonDefect);

static void BM_FiberDistance(benchmark::State& state) {
  const RadialProfile u = RadialProfile::calabi_log(2.0, 1.0, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_distance(u, 1e12));
}
BENCHMARK(BM_FiberDistance);
BENCHMARK_MAIN();
