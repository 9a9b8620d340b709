#include <benchmark/benchmark.h>

#include "afflow/afflow.hpp"

using namespace afflow;

static void BM_SpectralDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto body = make_random_body({.seed = 1}, n);
  const std::vector<double> s(body.support_samples().begin(),
                              body.support_samples().end());
  for (auto _ : state) {
    auto d = spectral_derivative(s, 2);
    benchmark::DoNotOptimize(d);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpectralDerivative)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_BodyConstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto body = make_random_body({.seed = 1}, n);
  const std::vector<double> s(body.support_samples().begin(),
                              body.support_samples().end());
  for (auto _ : state) {
    ConvexBody fresh{SupportFunction(s)};
    benchmark::DoNotOptimize(fresh.area());
  }
}
BENCHMARK(BM_BodyConstruction)->Arg(256)->Arg(1024);

static void BM_FlowStep(benchmark::State& state) {
  StepController ctrl;
  FlowState flow{.t = 0.0, .body = make_random_body({.seed = 1})};
  for (auto _ : state) {
    flow = step(std::move(flow), ctrl);
    if (flow.body.area() < 0.5) {
      state.PauseTiming();
      flow = FlowState{.t = 0.0, .body = make_random_body({.seed = 1})};
      state.ResumeTiming();
    }
  }
}
BENCHMARK(BM_FlowStep);

static void BM_ApplyLinearMap(benchmark::State& state) {
  const auto body = make_random_body({.seed = 2});
  const auto phi = LinearMap::rotation(0.7) * LinearMap::diagonal(1.4, 1.0 / 1.4);
  for (auto _ : state) {
    auto mapped = apply_linear_map(body, phi);
    benchmark::DoNotOptimize(mapped);
  }
}
BENCHMARK(BM_ApplyLinearMap);

static void BM_PolygonOracle(benchmark::State& state) {
  const auto body = make_random_body({.seed = 3});
  const auto m = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto areas = polygon_oracle(body, m);
    benchmark::DoNotOptimize(areas);
  }
}
BENCHMARK(BM_PolygonOracle)->Arg(1024)->Arg(4096);

static void BM_EntropyFunctional(benchmark::State& state) {
  const auto body = make_random_body({.seed = 4});
  for (auto _ : state) {
    benchmark::DoNotOptimize(entropy_functional(body));
  }
}
BENCHMARK(BM_EntropyFunctional);

static void BM_Sl2Frame(benchmark::State& state) {
  const auto body = make_random_body({.seed = 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(sl2_frame(body));
  }
}
BENCHMARK(BM_Sl2Frame);

BENCHMARK_MAIN();
