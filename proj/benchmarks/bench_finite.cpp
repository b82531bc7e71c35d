#include <benchmark/benchmark.h>

#include "pretop/finite_pretop.hpp"
#include "pretop/map_analysis.hpp"
#include "pretop/oracle_suite.hpp"
#include "pretop/regularization.hpp"

using namespace pretop;

namespace {

// A chain 1 -> 2 -> ... -> n, M(i) = {i, i+1}.
FinitePretop chain(int n) {
  std::vector<Subset> v;
  for (int i = 0; i < n; ++i) v.push_back(Subset::single(i) | (i + 1 < n ? Subset::single(i + 1) : Subset()));
  return FinitePretop::numbered(v);
}

void BM_adh(benchmark::State& st) {
  const FinitePretop x = chain(static_cast<int>(st.range(0)));
  Subset a = Subset::single(x.size() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(a = x.adh(Subset::single(x.size() - 1)));
}
BENCHMARK(BM_adh)->Arg(8)->Arg(32)->Arg(64);

void BM_partial_regularization(benchmark::State& st) {
  const FinitePretop x = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(partial_regularization(x));
}
BENCHMARK(BM_partial_regularization)->Arg(8)->Arg(32)->Arg(64);

void BM_filter_tower(benchmark::State& st) {
  const FinitePretop x = chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(filter_tower(x, {Subset::single(0)}));
}
BENCHMARK(BM_filter_tower)->Arg(8)->Arg(32)->Arg(64);

void BM_continuity(benchmark::State& st) {
  const auto method = static_cast<ContinuityMethod>(st.range(0));
  const FinitePretop x = chain(8);
  std::vector<int> table(8);
  for (int i = 0; i < 8; ++i) table[i] = i / 2;
  const FiniteMap f = FiniteMap::make(x, chain(8), table);
  for (auto _ : st) benchmark::DoNotOptimize(is_continuous(f, method));
}
BENCHMARK(BM_continuity)->DenseRange(0, 4)->ArgName("method");

void BM_compact_at(benchmark::State& st) {
  const auto method = static_cast<CompactMethod>(st.range(0));
  const FinitePretop x = chain(static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(compact_at(x, {x.points()}, x.points(), method));
}
BENCHMARK(BM_compact_at)->ArgsProduct({{0, 1}, {3, 4, 5}})->ArgNames({"method", "n"});

void BM_enumerate_hausdorff(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    int count = 0;
    for_each_pretop(n, [&](const FinitePretop& x) { count += is_hausdorff(x).hausdorff; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_hausdorff)->DenseRange(2, 4);

void BM_oracle_suite(benchmark::State& st) {
  OracleConfig cfg;
  cfg.max_points = 3;
  cfg.workers = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(run_oracle_suite(cfg));
}
BENCHMARK(BM_oracle_suite)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
