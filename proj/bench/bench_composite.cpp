// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "mock3d/compositor.hpp"
#include "mock3d/fixtures.hpp"
#include "mock3d/serial.hpp"

namespace {

using namespace mock3d;

struct Scene {
  ShapeMap shape;
  RasterImage bg;
  RasterImage env;
  CompositeParams params;
};

Scene make_scene(int size, bool blurred) {
  Scene s{gen_sphere_map(size, 0.8, 1.0), gen_checker_image(size, size, 16),
          gen_sky_image(size, size), {}};
  s.params.optics.a = 0.5;
  if (blurred) {
    s.params.gloss = 0.4;
    s.params.translucency_gain = 8.0;
  }
  return s;
}

template <bool Parallel, bool Blurred>
void BM_Composite(benchmark::State& state) {
  const Scene s = make_scene(static_cast<int>(state.range(0)), Blurred);
  for (auto _ : state) {
    RasterImage out = Parallel
                          ? composite(s.shape, nullptr, s.bg, &s.env, s.params)
                          : serial::composite(s.shape, nullptr, s.bg, &s.env,
                                              s.params);
    benchmark::DoNotOptimize(out.pixels().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}

void BM_BlurSeparable(benchmark::State& state) {
  const RasterImage img = gen_checker_image(256, 256, 16);
  for (auto _ : state) {
    RasterImage out = blur(img, static_cast<int>(state.range(0)), EdgeMode::kClamp);
    benchmark::DoNotOptimize(out.pixels().data());
  }
}

void BM_BlurDirectSerial(benchmark::State& state) {
  const RasterImage img = gen_checker_image(256, 256, 16);
  for (auto _ : state) {
    RasterImage out =
        serial::blur(img, static_cast<int>(state.range(0)), EdgeMode::kClamp);
    benchmark::DoNotOptimize(out.pixels().data());
  }
}

}  // namespace

BENCHMARK(BM_Composite<false, false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Composite<true, false>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Composite<false, true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_Composite<true, true>)->Arg(256)->Arg(1024);
BENCHMARK(BM_BlurSeparable)->Arg(1)->Arg(4)->Arg(16);
BENCHMARK(BM_BlurDirectSerial)->Arg(1)->Arg(4);

BENCHMARK_MAIN();
