#include <benchmark/benchmark.h>

#include "lrlab/enumerate.hpp"
#include "lrlab/lab/verify.hpp"
#include "lrlab/parallel.hpp"
#include "lrlab/power.hpp"
#include "lrlab/product.hpp"
#include "lrlab/tableau.hpp"

using namespace lrlab;

namespace {

const Partition kLeft{4, 3, 2, 1};
const Partition kRight{3, 2, 2, 1};

// Fresh engine per iteration: measures the recursion without memo hits.
void BM_RecursionCold(benchmark::State& state) {
  for (auto _ : state) {
    ProductEngine engine;
    benchmark::DoNotOptimize(engine.mul(kLeft, kRight, std::nullopt));
  }
}
BENCHMARK(BM_RecursionCold)->Unit(benchmark::kMillisecond);

void BM_RecursionWarm(benchmark::State& state) {
  ProductEngine engine;
  engine.mul(kLeft, kRight, std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(engine.mul(kLeft, kRight, std::nullopt));
}
BENCHMARK(BM_RecursionWarm);

void BM_Tableau(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mul_tableau(kLeft, kRight));
}
BENCHMARK(BM_Tableau)->Unit(benchmark::kMillisecond);

void BM_AllPairsRecursion(benchmark::State& state) {
  const auto parts = partitions_up_to(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    ProductEngine engine;
    for (const Partition& a : parts) {
      for (const Partition& b : parts) benchmark::DoNotOptimize(engine.mul(a, b, std::nullopt));
    }
  }
}
BENCHMARK(BM_AllPairsRecursion)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AllPairsTableau(benchmark::State& state) {
  const auto parts = partitions_up_to(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    for (const Partition& a : parts) {
      for (const Partition& b : parts) benchmark::DoNotOptimize(mul_tableau(a, b));
    }
  }
}
BENCHMARK(BM_AllPairsTableau)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

// args: exponent, cap, workers
void BM_TensorPower(benchmark::State& state) {
  set_worker_count(static_cast<unsigned>(state.range(2)));
  for (auto _ : state) {
    ProductEngine engine;
    benchmark::DoNotOptimize(tensor_power(engine, Partition{2, 1}, static_cast<int>(state.range(0)), static_cast<int>(state.range(1))));
  }
  set_worker_count(1);
}
BENCHMARK(BM_TensorPower)
    ->Args({12, 3, 1})
    ->Args({12, 3, 4})
    ->Args({8, 4, 1})
    ->Args({8, 4, 4})
    ->Unit(benchmark::kMillisecond);

void BM_LemmaSweep(benchmark::State& state) {
  for (auto _ : state) {
    default_engine().clear();
    benchmark::DoNotOptimize(lab::verify_lemma(lab::LemmaId::ChiSymmetry));
  }
}
BENCHMARK(BM_LemmaSweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
