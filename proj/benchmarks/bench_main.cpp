#include <benchmark/benchmark.h>

#include "fran/gap_scan.hpp"
#include "fran/lp_oracle.hpp"
#include "fran/ndt_pipelined.hpp"
#include "fran/ndt_serial.hpp"
#include "fran/scheme.hpp"
#include "fran/zf_verify.hpp"

namespace {

using namespace fran;

void BM_SerialEnvelope(benchmark::State& state) {
  SystemConfig cfg = make_config(static_cast<int>(state.range(0)), 32, 4, 0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial_envelope(cfg));
}
BENCHMARK(BM_SerialEnvelope)->Arg(4)->Arg(8)->Arg(32);

void BM_PipelinedEnvelope(benchmark::State& state) {
  SystemConfig cfg = make_config(static_cast<int>(state.range(0)), 32, 4, 0, 5);
  for (auto _ : state) benchmark::DoNotOptimize(pipelined_envelope(cfg));
}
BENCHMARK(BM_PipelinedEnvelope)->Arg(4)->Arg(8)->Arg(32);

void BM_GapScan(benchmark::State& state) {
  GapGrid grid = default_gap_grid();
  for (auto _ : state) benchmark::DoNotOptimize(scan_gaps(grid));
}
BENCHMARK(BM_GapScan)->Unit(benchmark::kMillisecond);

void BM_SynthesizeAndValidate(benchmark::State& state) {
  SystemConfig cfg = make_config(8, 32, 4, ratio(3, 8), 5);
  Multiplicity m(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SynthesizedScheme s = synthesize(cfg, m);
    benchmark::DoNotOptimize(validate(s));
  }
}
BENCHMARK(BM_SynthesizeAndValidate)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_ZeroForcingVerify(benchmark::State& state) {
  WorkedExample ex = worked_example(static_cast<int>(state.range(0)));
  SynthesizedScheme s = synthesize(ex.cfg, ex.m);
  std::uint64_t seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(verify_schedule(s, seed++));
}
BENCHMARK(BM_ZeroForcingVerify)->DenseRange(1, 4);

void BM_LpOracle(benchmark::State& state) {
  SystemConfig cfg = make_config(static_cast<int>(state.range(0)), 3, 1, ratio(1, 3), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_lp(build_lp(cfg)));
}
BENCHMARK(BM_LpOracle)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
