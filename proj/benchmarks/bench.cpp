#include <benchmark/benchmark.h>

#include "confembed/catalog.hpp"
#include "confembed/conformal.hpp"
#include "confembed/rep.hpp"
#include "confembed/verify.hpp"

using namespace confembed;

namespace {

Weight weight(const char* type, IntVec coords) { return root_system(LieType::parse(type))->weight(coords); }

void BM_FreudenthalF4(benchmark::State& state) {
  const Weight lambda = weight("F4", {1, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weight_multiplicities(lambda).total());
}
BENCHMARK(BM_FreudenthalF4);

void BM_FreudenthalE6(benchmark::State& state) {
  const Weight lambda = weight("E6", {1, 0, 0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(weight_multiplicities(lambda).total());
}
BENCHMARK(BM_FreudenthalE6);

void BM_TensorG2(benchmark::State& state) {
  const Weight a = weight("G2", {2, 1});
  const Weight b = weight("G2", {1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(a, b).total_dimension());
}
BENCHMARK(BM_TensorG2);

void BM_TensorF4Square(benchmark::State& state) {
  const Weight a = weight("F4", {0, 0, 0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(a, a).total_dimension());
}
BENCHMARK(BM_TensorF4Square);

void BM_SolveCatalog(benchmark::State& state) {
  const auto specs = catalog();
  for (auto _ : state)
    for (const auto& spec : specs) benchmark::DoNotOptimize(solve_conformal_levels(spec).solutions.size());
}
BENCHMARK(BM_SolveCatalog);

void BM_FusionScanG2InD4(benchmark::State& state) {
  const auto spec = make_spec("g2-in-d4");
  for (auto _ : state) benchmark::DoNotOptimize(fusion_scan(spec, -2).findings.size());
}
BENCHMARK(BM_FusionScanG2InD4);

}  // namespace

BENCHMARK_MAIN();
