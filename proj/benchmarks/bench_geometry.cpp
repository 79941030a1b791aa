#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "disctiler/catalog.hpp"
#include "disctiler/containment.hpp"
#include "disctiler/enclosing.hpp"
#include "disctiler/signature.hpp"

namespace {

using namespace disctiler;

std::vector<Point> random_points(size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point p{u(rng), u(rng)};
    if (p.norm() <= 1.0) pts.push_back(p);
  }
  return pts;
}

void BM_min_enclosing_circle(benchmark::State& state) {
  const auto pts = random_points(size_t(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_enclosing_circle(pts));
  }
}
BENCHMARK(BM_min_enclosing_circle)->Arg(20)->Arg(200)->Arg(2000);

void BM_point_in_region(benchmark::State& state) {
  const Tiling t = build_named("rot3");
  const Region r = Region::make(t.tiles[0]);
  const auto pts = random_points(256, 11);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(point_in_region(r, pts[i++ % pts.size()]));
  }
}
BENCHMARK(BM_point_in_region);

void BM_signature(benchmark::State& state) {
  const Tiling t = build_named("petal12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(signature(t.tiles[0]));
  }
}
BENCHMARK(BM_signature);

void BM_find_congruence(benchmark::State& state) {
  const Tiling t = build_named("petal12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_congruence(t.tiles[0], t.tiles[5]));
  }
}
BENCHMARK(BM_find_congruence);

}  // namespace

BENCHMARK_MAIN();
