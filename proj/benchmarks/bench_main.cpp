#include <benchmark/benchmark.h>

#include "tilecoin/coincidence.hpp"
#include "tilecoin/lattice.hpp"
#include "tilecoin/spectrum.hpp"

using namespace tilecoin;

namespace {

const Substitution kRauzy({{0, 1}, {0, 2}, {0}}, "rauzy");
const Substitution kRauzy2({{0, 4}, {0, 5}, {0}, {3, 1}, {3, 2}, {3}}, "rauzy2");
const Substitution kThueMorse({{0, 1}, {1, 0}}, "thue-morse");

void BM_FieldMultiply(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(kRauzy);
  FieldElem x = sys.beta().inverse() * Rational(3, 7) + sys.length(1);
  const FieldElem y = sys.length(1);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_FieldMultiply);

void BM_FieldSign(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(kRauzy);
  const FieldElem x = sys.beta().pow(12) - sys.length(0) * Rational(1500);
  for (auto _ : state) benchmark::DoNotOptimize(x.sign());
}
BENCHMARK(BM_FieldSign);

void BM_BuildSystem(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(SuspensionSystem::build(kRauzy2));
}
BENCHMARK(BM_BuildSystem);

void BM_GeneratePatch(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(kRauzy);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_patch(sys, PatchSeed::one_sided(0), n));
  state.SetComplexityN(static_cast<std::int64_t>(generate_patch(sys, PatchSeed::one_sided(0), n).tiles.size()));
}
BENCHMARK(BM_GeneratePatch)->DenseRange(6, 14, 4)->Complexity();

void BM_GeometricStrong(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(kRauzy2);
  const auto c = control_points(sys, TileMap{{1, 1, 0, 0, 0, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(geometric_strong(sys, c));
}
BENCHMARK(BM_GeometricStrong)->Unit(benchmark::kMillisecond);

void BM_HermiteNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<std::vector<BigInt>> rows(2 * n, std::vector<BigInt>(n));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) rows[r][c] = static_cast<long>((r * 7919 + c * 104729) % 201) - 100;
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(rows, n));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(3)->Arg(6)->Arg(12);

void BM_HeightGroup(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(kRauzy2);
  const auto c = left_endpoints(sys);
  for (auto _ : state) benchmark::DoNotOptimize(height_group(sys, c));
}
BENCHMARK(BM_HeightGroup)->Unit(benchmark::kMillisecond);

void BM_OverlapClosure(benchmark::State& state) {
  const auto sys = SuspensionSystem::build(state.range(0) == 0 ? kRauzy : kThueMorse);
  const auto c = left_endpoints(sys);
  for (auto _ : state) benchmark::DoNotOptimize(overlap_coincidence(sys, c, 32));
}
BENCHMARK(BM_OverlapClosure)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BalancedPairs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(balanced_pairs(kRauzy));
}
BENCHMARK(BM_BalancedPairs)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
