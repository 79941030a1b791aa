#include <benchmark/benchmark.h>

#include "disctiler/catalog.hpp"
#include "disctiler/tiling.hpp"

namespace {

using namespace disctiler;

void BM_validate(benchmark::State& state) {
  const Tiling t = build_named(state.range(0) == 0 ? "rot3" : "petal12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(t));
  }
}
BENCHMARK(BM_validate)->Arg(0)->Arg(1);

void BM_build_rotgen_fuzz(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const GeneratorCurve g = random_generator(seed++, 3, 4);
    benchmark::DoNotOptimize(build_rotgen(g, 3));
  }
}
BENCHMARK(BM_build_rotgen_fuzz);

void BM_scan_arc_equation(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_arc_equation(50, 500, 1e-9));
  }
}
BENCHMARK(BM_scan_arc_equation);

}  // namespace
