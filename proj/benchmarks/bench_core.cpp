#include <benchmark/benchmark.h>

#include "lorhom/certifier.hpp"
#include "lorhom/curve.hpp"
#include "lorhom/factor.hpp"
#include "lorhom/mesh.hpp"
#include "lorhom/random.hpp"

using namespace lorhom;

namespace {

void BM_FactorExcess(benchmark::State& state) {
  const auto f = ConformalFactorSpec::base();
  Rng rng(1);
  std::vector<SpherePoint> pts;
  for (int k = 0; k < 4096; ++k)
    pts.push_back(SpherePoint::from_angles(rng.uniform(0.0, kPi), rng.uniform(-kPi, kPi)));
  for (auto _ : state) {
    double acc = 0.0;
    for (const auto& p : pts) acc += f.excess(p);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_FactorExcess);

void BM_MeridianLength(benchmark::State& state) {
  const auto f = ConformalFactorSpec::base();
  const auto c = meridian(0.25, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(length_split(f, c));
}
BENCHMARK(BM_MeridianLength)->Arg(256)->Arg(2048);

void BM_BuildMesh(benchmark::State& state) {
  const auto f = ConformalFactorSpec::base();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_mesh(f, level).vertex_count());
}
BENCHMARK(BM_BuildMesh)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ReducedDistances(benchmark::State& state) {
  const auto mesh = build_mesh(ConformalFactorSpec::base(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mesh.reduced_distances(Pole::North));
}
BENCHMARK(BM_ReducedDistances)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ExcessField(benchmark::State& state) {
  const auto f = ConformalFactorSpec::base();
  const int level = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ExcessField field(f, level);
    benchmark::DoNotOptimize(&field);
  }
}
BENCHMARK(BM_ExcessField)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
