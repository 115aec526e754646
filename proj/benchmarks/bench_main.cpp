#include <benchmark/benchmark.h>

#include <random>

#include "projlink/catalog.hpp"
#include "projlink/incidence.hpp"
#include "projlink/projective.hpp"
#include "projlink/symmetry.hpp"

namespace {

using namespace projlink;

PlanarMap k4() {
  return build_map({{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}},
                   {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10});
}

// Wheel with n spokes: hub rotation counterclockwise, rim vertices of degree 3.
PlanarMap wheel(int n) {
  // Spoke i: darts 2i (hub) and 2i+1 (rim i). Rim edge i: darts 2n+2i (rim i)
  // and 2n+2i+1 (rim i+1).
  std::vector<std::vector<Dart>> rot(static_cast<std::size_t>(n + 1));
  std::vector<Dart> pairing(static_cast<std::size_t>(4 * n));
  for (int i = 0; i < 4 * n; ++i) pairing[static_cast<std::size_t>(i)] = i ^ 1;
  for (int i = 0; i < n; ++i) rot[0].push_back(2 * i);
  for (int i = 0; i < n; ++i) {
    const int prev_rim = (i + n - 1) % n;
    rot[static_cast<std::size_t>(i + 1)] = {2 * i + 1, 2 * n + 2 * prev_rim + 1, 2 * n + 2 * i};
  }
  return build_map(rot, pairing);
}

void BM_Automorphisms(benchmark::State& state) {
  const PlanarMap m = medial(wheel(static_cast<int>(state.range(0)))).map;
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(m, OrientationPolicy::either));
}
BENCHMARK(BM_Automorphisms)->Arg(4)->Arg(8)->Arg(16);

void BM_CheckProjective(benchmark::State& state) {
  const auto g = EdgeSignedMap::constant(wheel(static_cast<int>(state.range(0))), Sign::plus);
  for (auto _ : state) benchmark::DoNotOptimize(check_projective(g));
}
BENCHMARK(BM_CheckProjective)->Arg(4)->Arg(8)->Arg(16);

void BM_AntipodalSelfDual(benchmark::State& state) {
  const PlanarMap m = wheel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_antipodally_self_dual(m));
}
BENCHMARK(BM_AntipodalSelfDual)->Arg(3)->Arg(5)->Arg(9);

void BM_SymmetricCyclesK4(benchmark::State& state) {
  const PlanarMap m = k4();
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_cycles(m));
}
BENCHMARK(BM_SymmetricCyclesK4);

void BM_Bracket(benchmark::State& state) {
  const auto d = tait_to_diagram(EdgeSignedMap::constant(wheel(static_cast<int>(state.range(0))), Sign::plus));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d, 24));
}
BENCHMARK(BM_Bracket)->Arg(3)->Arg(4)->Arg(5)->Arg(6);

void BM_Regression(benchmark::State& state) {
  const auto entries = load_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(run_regression(entries));
}
BENCHMARK(BM_Regression);

void BM_InversionIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_inversion_identity(1000, 1));
}
BENCHMARK(BM_InversionIdentity);

}  // namespace

BENCHMARK_MAIN();
