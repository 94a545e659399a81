#include <benchmark/benchmark.h>

#include "aetilde/artubes.hpp"
#include "aetilde/grcompute.hpp"
#include "aetilde/measure.hpp"
#include "aetilde/quiver.hpp"
#include "aetilde/rhombic.hpp"
#include "aetilde/strings.hpp"

using namespace aet;

namespace {
const QuiverSpec kQ1 = parse_quiver("><<><,a,b,c,d,e");
}

static void BM_greedy_measure(benchmark::State& state) {
  StringModule m = make_string(kQ1, "c", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(greedy_measure(m));
}
BENCHMARK(BM_greedy_measure)->Arg(18)->Arg(60)->Arg(240);

static void BM_oracle_table(benchmark::State& state) {
  for (auto _ : state) {
    OracleTable table(kQ1, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(table.at(0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_oracle_table)->Arg(20)->Arg(40);

static void BM_cmp_periodic(benchmark::State& state) {
  PeriodicMeasure a = canonical_periodic({1, 1}, {2, 2, 1});
  PeriodicMeasure b = canonical_periodic({1, 1, 2, 2, 1}, {2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(cmp_periodic(a, b));
}
BENCHMARK(BM_cmp_periodic);

static void BM_e_value(benchmark::State& state) {
  Measure m = concat_power({1, 1}, {2, 2, 1}, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(e_value(m));
}
BENCHMARK(BM_e_value)->Arg(8)->Arg(64);

static void BM_build_tube(benchmark::State& state) {
  for (auto _ : state) {
    Tube t = build_tube(kQ1, TubeKind::RightTube, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t.grid.back().front());
  }
}
BENCHMARK(BM_build_tube)->Arg(6)->Arg(12);

static void BM_tiling_report(benchmark::State& state) {
  Tube t = build_tube(kQ1, TubeKind::RightTube, 9);
  for (auto _ : state) benchmark::DoNotOptimize(tiling_report(t, 9).tiled);
}
BENCHMARK(BM_tiling_report);

BENCHMARK_MAIN();
