#include <benchmark/benchmark.h>

#include "sierpinski/carpet.hpp"
#include "sierpinski/lattes.hpp"
#include "sierpinski/render.hpp"
#include "sierpinski/sampling.hpp"
#include "sierpinski/tiling.hpp"

using namespace sierpinski;

static void BM_Member(benchmark::State& state) {
  const long p = state.range(0);
  const auto pts = pillow_sample(p, 256, 1);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(member(p, CarpetSpace::Dp, pts[k++ % pts.size()]));
}
BENCHMARK(BM_Member)->Arg(3)->Arg(5)->Arg(7);

static void BM_LattesIterate(benchmark::State& state) {
  const auto pts = dp_sample(3, 256, 2);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lattes_iterate(3, pts[k++ % pts.size()], static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_LattesIterate)->Arg(1)->Arg(4)->Arg(16);

static void BM_Distance(benchmark::State& state) {
  const auto pts = pillow_sample(3, 257, 3);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_squared(pts[k % 256], pts[k % 256 + 1]));
    ++k;
  }
}
BENCHMARK(BM_Distance);

static void BM_GoodTileCount(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tile_count(state.range(0), static_cast<unsigned>(state.range(1)), true));
}
BENCHMARK(BM_GoodTileCount)->Args({3, 5})->Args({5, 5})->Args({7, 4})->Unit(benchmark::kMillisecond);

static void BM_CrossRegion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_region_check(3, 1, static_cast<unsigned>(state.range(0)), {Face::Front, 1, 1, 1}));
}
BENCHMARK(BM_CrossRegion)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_RenderCarpet(benchmark::State& state) {
  RenderConfig c;
  c.level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(render_svg(c));
}
BENCHMARK(BM_RenderCarpet)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
