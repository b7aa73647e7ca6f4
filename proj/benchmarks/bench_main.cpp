#include <benchmark/benchmark.h>

#include "haken/construction.hpp"
#include "haken/corpus.hpp"
#include "haken/flag.hpp"
#include "haken/generators.hpp"
#include "haken/homology.hpp"
#include "haken/isomorphism.hpp"
#include "haken/pattern.hpp"
#include "haken/surgery.hpp"

using namespace haken;

namespace {

void BM_Faces(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Complex k = join(gen::cycle(m), gen::cycle(m));
    benchmark::DoNotOptimize(f_vector(k));
  }
}
BENCHMARK(BM_Faces)->Arg(4)->Arg(8)->Arg(16);

void BM_BarycentricSubdivision(benchmark::State& state) {
  const auto k = gen::cross_polytope_boundary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(barycentric_subdivision(k));
}
BENCHMARK(BM_BarycentricSubdivision)->Arg(3)->Arg(4)->Arg(5);

void BM_Homology(benchmark::State& state) {
  const auto k = gen::grid_torus3(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(k));
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(4);

void BM_GeneralizedHomologySphere(benchmark::State& state) {
  const auto k = barycentric_subdivision(gen::simplex_boundary(4));
  for (auto _ : state) benchmark::DoNotOptimize(is_generalized_homology_sphere(k, 4));
}
BENCHMARK(BM_GeneralizedHomologySphere);

void BM_FlagReport(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto k = join(gen::cycle(m), gen::cycle(m));
  for (auto _ : state) benchmark::DoNotOptimize(flag_report(k));
}
BENCHMARK(BM_FlagReport)->Arg(4)->Arg(8)->Arg(16);

void BM_FlagViaLinks(benchmark::State& state) {
  const auto k = join(gen::cycle(6), gen::cycle(6));
  for (auto _ : state) benchmark::DoNotOptimize(is_flag_via_links(k));
}
BENCHMARK(BM_FlagViaLinks);

void BM_Isomorphism(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto a = join(gen::cycle(m), gen::cycle(m + 1));
  const auto b = join(gen::cycle(m + 1), gen::cycle(m));
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(a, b));
}
BENCHMARK(BM_Isomorphism)->Arg(4)->Arg(6);

void BM_Strata(benchmark::State& state) {
  const auto p = patterns::cube_cell(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(strata(p));
}
BENCHMARK(BM_Strata)->Arg(2)->Arg(3)->Arg(4);

void BM_OrbifoldEulerNerve(benchmark::State& state) {
  const auto p = patterns::cube_cell(3);
  for (auto _ : state) benchmark::DoNotOptimize(orbifold_euler_nerve(p));
}
BENCHMARK(BM_OrbifoldEulerNerve);

void BM_Double(benchmark::State& state) {
  const auto p = patterns::polygon_cell(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_double(p));
}
BENCHMARK(BM_Double)->Arg(4)->Arg(8)->Arg(10);

void BM_CutOpen(benchmark::State& state) {
  const auto l = corpus::genus2_ledger();
  for (auto _ : state) benchmark::DoNotOptimize(cut_open(l.initial, l.steps[0].cut));
}
BENCHMARK(BM_CutOpen);

void BM_Hierarchy(benchmark::State& state) {
  const auto l = corpus::torus3_ledger();
  for (auto _ : state) benchmark::DoNotOptimize(certify_hierarchy(run_prehierarchy(l.initial, l.steps)));
}
BENCHMARK(BM_Hierarchy)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
