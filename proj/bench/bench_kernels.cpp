// Serial reference kernels against the OpenMP ones, on a fixed mid-size
// instance. Run with --benchmark_time_unit=ms for readable numbers.
#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "ribbonlink/bollobas_riordan.hpp"
#include "ribbonlink/link_diagram.hpp"
#include "ribbonlink/medial.hpp"
#include "ribbonlink/ribbon_graph.hpp"

namespace {

// Connected map with the given edge count, fixed across runs.
ribbonlink::RibbonGraph fixed_instance(int edges, unsigned seed) {
  std::mt19937 rng(seed);
  const int darts = 2 * edges;
  std::vector<ribbonlink::Dart> sigma(darts);
  std::iota(sigma.begin(), sigma.end(), 0);
  // One vertex, random rotation: always connected.
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<ribbonlink::Dart> rot = sigma;
  for (int i = 0; i < darts; ++i) sigma[rot[i]] = rot[(i + 1) % darts];
  std::vector<ribbonlink::Dart> alpha(darts);
  for (int d = 0; d < darts; ++d) alpha[d] = d ^ 1;
  return ribbonlink::RibbonGraph(std::move(sigma), std::move(alpha));
}

void BM_br_serial(benchmark::State& state) {
  const auto g = fixed_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(ribbonlink::br_polynomial_serial(g));
}

void BM_br_parallel(benchmark::State& state) {
  const auto g = fixed_instance(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(ribbonlink::br_polynomial(g));
}

void BM_bracket_serial(benchmark::State& state) {
  const auto d = ribbonlink::medial_diagram(fixed_instance(static_cast<int>(state.range(0)), 7))
                     .diagram;
  for (auto _ : state) benchmark::DoNotOptimize(ribbonlink::kauffman_bracket_serial(d));
}

void BM_bracket_parallel(benchmark::State& state) {
  const auto d = ribbonlink::medial_diagram(fixed_instance(static_cast<int>(state.range(0)), 7))
                     .diagram;
  for (auto _ : state) benchmark::DoNotOptimize(ribbonlink::kauffman_bracket(d));
}

}  // namespace

BENCHMARK(BM_br_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_br_parallel)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bracket_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bracket_parallel)->Arg(10)->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
