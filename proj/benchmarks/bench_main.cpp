#include <benchmark/benchmark.h>

#include "hring/hring.hpp"

using namespace hring;

namespace {

const cplx kA{0.01, 0.0};
const cplx kB{-1.23796766, -0.16535887};

void BM_Evaluate(benchmark::State& state) {
  const Map m{MeroPoleExp{kA, kB}};
  SpherePoint z = cplx{0.3, 0.1};
  for (auto _ : state) {
    z = m(z);
    if (z.is_infinity()) z = cplx{0.3, 0.1};
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_Evaluate);

void BM_Derivative(benchmark::State& state) {
  const Map m{QuarticBlaschke{1.0 / 40.0, 0.29, 2}};
  cplx z{0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(m.derivative(z));
}
BENCHMARK(BM_Derivative);

void BM_ClassifyRingPoint(benchmark::State& state) {
  const Map m{MeroPoleExp{kA, kB}};
  Budget b;
  b.ring_period = 2;
  const SpherePoint seed = find_ring_seed(m, RayScan{{0.0, 0.0}, {1.0, 0.0}, 1e-3, 1.0, 400}, b);
  for (auto _ : state) benchmark::DoNotOptimize(classify_point(m, seed, b));
}
BENCHMARK(BM_ClassifyRingPoint)->Unit(benchmark::kMillisecond);

void BM_RenderDynamical(benchmark::State& state) {
  const Map m{MeroPoleExp{kA, kB}};
  Budget b;
  b.ring_period = 2;
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(render_dynamical(m, {-2.9, 1.1, -1.2, 1.2}, w, w * 3 / 5, b));
}
BENCHMARK(BM_RenderDynamical)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_QuadlikeSmallGrid(benchmark::State& state) {
  QuadlikeGrid g;
  g.interior = 100;
  g.boundary = 1000;
  g.z_res = 60;
  g.containment_lambdas = 100;
  g.degree_lambdas = 1;
  g.degree_w = 10;
  for (auto _ : state) benchmark::DoNotOptimize(verify_mandelbrot_like(g));
}
BENCHMARK(BM_QuadlikeSmallGrid)->Unit(benchmark::kMillisecond);

void BM_CircleRotation(benchmark::State& state) {
  const Map m{Arnold{0.5, 0.3}};
  for (auto _ : state) benchmark::DoNotOptimize(circle_rotation_number(m, 10000));
}
BENCHMARK(BM_CircleRotation)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
