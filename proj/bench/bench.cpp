#include <benchmark/benchmark.h>

#include "apollonian/verify.hpp"

using namespace apollonian;
using Q = Rational;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(1) != 0 ? Execution::parallel : Execution::serial;
}

std::shared_ptr<const Packing<Q>> window(int bound) {
  return std::make_shared<const Packing<Q>>(generate(preset<Q>("apollonian-window"), Q(bound)));
}

void BM_Generate(benchmark::State& state) {
  GenerateOptions opts;
  opts.execution = mode(state);
  const auto root = preset<Q>("apollonian-window");
  for (auto _ : state) benchmark::DoNotOptimize(generate(root, Q(state.range(0)), opts));
}

void BM_BuildNetwork(benchmark::State& state) {
  const auto p = window(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_network(p, mode(state)));
  state.counters["pairs"] = static_cast<double>(tangent_pairs(p->quadruples).size());
}

void BM_VerifyAll(benchmark::State& state) {
  const auto net = build_network(window(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(net, mode(state)));
}

void BM_VerifyAllFloat(benchmark::State& state) {
  const auto p = std::make_shared<const Packing<double>>(
      generate(preset<double>("apollonian-window"), static_cast<double>(state.range(0))));
  const auto net = build_network(p);
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(net, mode(state)));
}

}  // namespace

BENCHMARK(BM_Generate)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildNetwork)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAll)->ArgsProduct({{200, 1000}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyAllFloat)->ArgsProduct({{1000}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
