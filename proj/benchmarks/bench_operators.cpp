#include <benchmark/benchmark.h>

#include "sasaki/checks.hpp"

using namespace sasaki;

namespace {

void BM_BuildPointModel(benchmark::State& state) {
  const Params p(static_cast<int>(state.range(0)), 1.0, 2.5);
  for (auto _ : state) benchmark::DoNotOptimize(build_point_model(p));
}
BENCHMARK(BM_BuildPointModel)->Arg(1)->Arg(2)->Arg(3);

void BM_SigmaT(benchmark::State& state) {
  const PointModel m = build_point_model(Params(static_cast<int>(state.range(0)), 1.0, 2.5));
  for (auto _ : state) benchmark::DoNotOptimize(sigma_T(m));
}
BENCHMARK(BM_SigmaT)->Arg(1)->Arg(2)->Arg(3);

void BM_CurvatureSuite(benchmark::State& state) {
  const PointModel m = build_point_model(Params(static_cast<int>(state.range(0)), 1.0, 2.5));
  for (auto _ : state) benchmark::DoNotOptimize(build_curvature_suite(m));
}
BENCHMARK(BM_CurvatureSuite)->Arg(1)->Arg(2)->Arg(3);

void BM_Eigensolve(benchmark::State& state) {
  const PointModel m = build_point_model(Params(static_cast<int>(state.range(0)), 1.0, 2.5));
  const CurvatureSuite s = build_curvature_suite(m);
  for (auto _ : state) benchmark::DoNotOptimize(eigh(s.Rg));
}
BENCHMARK(BM_Eigensolve)->Arg(1)->Arg(2)->Arg(3);

void BM_Certify(benchmark::State& state) {
  const PointModel m = build_point_model(Params(1, 1.0, 3.0));
  const CurvatureSuite s = build_curvature_suite(m);
  const PForm w = canonical_modifier(m, ModifierKind::sphere_like, 0.05);
  for (auto _ : state)
    benchmark::DoNotOptimize(certify(s, m, w, ModifierKind::sphere_like, 0.05));
}
BENCHMARK(BM_Certify);

void BM_SpModel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_sp_model(static_cast<int>(state.range(0)), 1.0, 1.0));
}
BENCHMARK(BM_SpModel)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
