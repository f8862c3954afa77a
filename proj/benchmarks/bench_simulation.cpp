#include <benchmark/benchmark.h>

#include "vecsim/config.hpp"
#include "vecsim/io.hpp"
#include "vecsim/simulator.hpp"
#include "vecsim/tvf.hpp"

namespace {

struct Demo {
  vecsim::BinaryGrid image = vecsim::read_pgm(VECSIM_DATA_DIR "/demo_tree.pgm");
  vecsim::SimulationConfig cfg = vecsim::parse_config(VECSIM_DATA_DIR "/demo.cfg");
};

const Demo& demo() {
  static const Demo d;
  return d;
}

void BM_BuildTvf(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(vecsim::build_tvf(demo().image, demo().cfg));
}
BENCHMARK(BM_BuildTvf)->Unit(benchmark::kMillisecond);

// One realization per iteration; arg is beta in percent.
void BM_Simulate(benchmark::State& state) {
  vecsim::SimulationConfig cfg = demo().cfg;
  cfg.beta = static_cast<double>(state.range(0)) / 100.0;
  const vecsim::Simulator sim(vecsim::build_tvf(demo().image, cfg).field, cfg);
  std::uint64_t index = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sim.run(index++));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(demo().image.size()));
}
BENCHMARK(BM_Simulate)->Arg(0)->Arg(50)->Unit(benchmark::kMillisecond)->Iterations(2);

}  // namespace
BENCHMARK_MAIN();
