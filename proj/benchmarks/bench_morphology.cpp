#include <benchmark/benchmark.h>

#include <random>

#include "vecsim/morphology.hpp"

namespace {

vecsim::BinaryGrid noise(int n) {
  std::mt19937 gen(1);
  std::bernoulli_distribution coin(0.7);
  vecsim::BinaryGrid g(n, n);
  for (auto& c : g.cells()) c = coin(gen) ? 1 : 0;
  return g;
}

void BM_Erode(benchmark::State& state) {
  const auto g = noise(static_cast<int>(state.range(0)));
  const auto selem = vecsim::StructuringElement::cross();
  for (auto _ : state) benchmark::DoNotOptimize(vecsim::erode(g, selem));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Erode)->Arg(64)->Arg(183)->Arg(512);

void BM_Components(benchmark::State& state) {
  const auto g = noise(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vecsim::connected_components(g, 8));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.size()));
}
BENCHMARK(BM_Components)->Arg(183)->Arg(512);

}  // namespace
