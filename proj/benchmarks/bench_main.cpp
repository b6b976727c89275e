// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include "equisolid/classifier.hpp"
#include "equisolid/links.hpp"
#include "equisolid/picard.hpp"
#include "equisolid/toric.hpp"

using namespace equisolid;

namespace {

CycNum z(int n, long k = 1) { return CycNum::root_of_unity(n, k); }

void BM_CycMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CycNum a = CycNum(3, 7) + z(n) * 2 - z(n, 3);
  const CycNum b = CycNum(-5, 2) * z(n, 2) + 1;
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMultiply)->Arg(3)->Arg(8)->Arg(24)->Arg(120);

void BM_CycInverse(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CycNum a = CycNum(3, 7) + z(n) * 2 - z(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycInverse)->Arg(8)->Arg(24)->Arg(120);

void BM_CloseCatalogGroup(benchmark::State& state, const char* name) {
  const ClassifyInput& in = catalog_entry(name).input;
  for (auto _ : state) benchmark::DoNotOptimize(input_group(in).order());
}
BENCHMARK_CAPTURE(BM_CloseCatalogGroup, p2_S4, "p2/S4");
BENCHMARK_CAPTURE(BM_CloseCatalogGroup, p1p1_contrex, "p1p1/contrex");
BENCHMARK_CAPTURE(BM_CloseCatalogGroup, dp6_D6, "dp6/D6");

void BM_IdentifyNamed(benchmark::State& state) {
  const FiniteGroup g = input_group(catalog_entry("p1p1/contrex").input).group;
  for (auto _ : state) benchmark::DoNotOptimize(identify_named(g).name);
}
BENCHMARK(BM_IdentifyNamed);

void BM_SubgroupsUpTo(benchmark::State& state) {
  const FiniteGroup g = symmetric_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subgroups_up_to(g).size());
}
BENCHMARK(BM_SubgroupsUpTo)->Arg(4)->Arg(5);

void BM_FibreProduct(benchmark::State& state) {
  auto perms = permutation_group({{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
  auto s5 = std::make_shared<FiniteGroup>(perms.group);
  auto z2 = std::make_shared<FiniteGroup>(cyclic_group(2));
  const GroupHom sign = make_hom(s5, z2, {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(fibre_product(sign, sign).group.order());
}
BENCHMARK(BM_FibreProduct)->Unit(benchmark::kMillisecond);

void BM_SmallOrbits(benchmark::State& state) {
  const SurfaceGroup& g = octahedral_group();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_small_orbits(g, 8).size());
}
BENCHMARK(BM_SmallOrbits)->Unit(benchmark::kMillisecond);

void BM_LinksTetrahedral(benchmark::State& state) {
  const SurfaceGroup& g = tetrahedral_group();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_links_p2(g).links.size());
}
BENCHMARK(BM_LinksTetrahedral)->Unit(benchmark::kMillisecond);

void BM_InvolutionEval(benchmark::State& state) {
  const RationalMapP2 m = ia_map(2);
  const Vec p{1, 2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(m(p));
}
BENCHMARK(BM_InvolutionEval);

void BM_InvariantRankSextic(benchmark::State& state) {
  const SurfaceGroup g = input_group(catalog_entry("dp6/D6").input);
  for (auto _ : state) benchmark::DoNotOptimize(invariant_rank(g));
}
BENCHMARK(BM_InvariantRankSextic);

void BM_ClassifyCatalog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(catalog_verdicts().size());
}
BENCHMARK(BM_ClassifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
