#include <benchmark/benchmark.h>

#include "pentaheesch/corona.hpp"
#include "pentaheesch/spots.hpp"

namespace pentaheesch {
namespace {

void BM_SolveAllRows(benchmark::State& state) {
  const bool closed = state.range(0) != 0;
  SolveOptions opt;
  opt.use_closed_forms = closed;
  for (auto _ : state) {
    for (const ReferenceRow& row : reference_rows()) benchmark::DoNotOptimize(solve(row.category, row.params, opt));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(reference_rows().size()));
}
BENCHMARK(BM_SolveAllRows)->Arg(0)->Arg(1)->ArgName("closed_forms");

void BM_EnumerateAndClassifySpots(benchmark::State& state) {
  std::vector<Pentagon> tiles;
  for (const ReferenceRow& row : reference_rows()) tiles.push_back(solve(row.category, row.params).pentagon);
  for (auto _ : state) {
    for (const Pentagon& p : tiles) benchmark::DoNotOptimize(classify_all(p, enumerate_spots(p)));
  }
}
BENCHMARK(BM_EnumerateAndClassifySpots)->Unit(benchmark::kMillisecond);

void BM_Category1Coronas(benchmark::State& state) {
  const Pentagon p = solve(1, {}).pentagon;
  SearchOptions opt;
  opt.mode = state.range(0) ? PlacementModel::kEecPlusCollinear : PlacementModel::kEecOnly;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_coronas(p, {Placement{}}, opt));
}
BENCHMARK(BM_Category1Coronas)->Arg(0)->Arg(1)->ArgName("collinear")->Unit(benchmark::kMillisecond);

void BM_HeeschSweep(benchmark::State& state) {
  std::vector<Pentagon> tiles;
  for (const ReferenceRow& row : reference_rows()) tiles.push_back(solve(row.category, row.params).pentagon);
  SearchOptions opt;
  opt.layer_limit = 2;
  for (auto _ : state) {
    for (const Pentagon& p : tiles) benchmark::DoNotOptimize(heesch_bound(p, opt));
  }
}
BENCHMARK(BM_HeeschSweep)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_ValidatePatch(benchmark::State& state) {
  const Pentagon p = solve(3, Params{std::nullopt, 1}).pentagon;
  SearchOptions opt;
  opt.layer_limit = 2;
  const Patch w = *heesch_bound(p, opt).witness;
  for (auto _ : state) benchmark::DoNotOptimize(validate_patch(p, w));
}
BENCHMARK(BM_ValidatePatch)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace pentaheesch
BENCHMARK_MAIN();
