#include <benchmark/benchmark.h>

#include "pretop/end_extension.hpp"
#include "pretop/model.hpp"
#include "pretop/set_literal.hpp"
#include "pretop/symbolic_map.hpp"
#include "pretop/symbolic_pretop.hpp"
#include "pretop/traces.hpp"

using namespace pretop;
using namespace pretop::sym;

namespace {

void BM_cl_theta_urysohn(benchmark::State& st) {
  const SymbolicPretop u = urysohn();
  const DefSet b = parse_set_literal("grid(G; cols>0)", u.schema());
  const int it = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cl_theta(u, b, it));
}
BENCHMARK(BM_cl_theta_urysohn)->Arg(1)->Arg(2)->Arg(3);

void BM_sym_is_compact(benchmark::State& st) {
  const SymbolicPretop x = st.range(0) ? sym_regularize(urysohn()) : urysohn();
  for (auto _ : st) benchmark::DoNotOptimize(sym_is_compact(x));
}
BENCHMARK(BM_sym_is_compact)->Arg(0)->Arg(1);

void BM_sym_hausdorff(benchmark::State& st) {
  const SymbolicPretop x = half_grid();
  for (auto _ : st) benchmark::DoNotOptimize(sym_hausdorff(x));
}
BENCHMARK(BM_sym_hausdorff);

void BM_end_extension(benchmark::State& st) {
  const SymbolicPretop x = st.range(0) ? urysohn() : discrete_ray(3);
  for (auto _ : st) benchmark::DoNotOptimize(end_extension(x));
}
BENCHMARK(BM_end_extension)->Arg(0)->Arg(1);

void BM_sym_is_continuous(benchmark::State& st) {
  const SymbolicPretop x = discrete_ray(2), y = discrete_ray(1);
  const SymMap f = SymMap::make(x, y, {StrandMap::affine("R0", "R0", {2, 1}), StrandMap::affine("R1", "R0", {2, 1}, {1, 0})});
  for (auto _ : st) benchmark::DoNotOptimize(sym_is_continuous(f));
}
BENCHMARK(BM_sym_is_continuous);

void BM_sym_is_onto(benchmark::State& st) {
  const SymbolicPretop x = discrete_ray(2), y = discrete_ray(1);
  const SymMap f = SymMap::make(x, y, {StrandMap::affine("R0", "R0", {2, 1}), StrandMap::affine("R1", "R0", {2, 1}, {1, 0})});
  for (auto _ : st) benchmark::DoNotOptimize(sym_is_onto(f));
}
BENCHMARK(BM_sym_is_onto);

void BM_parse_model(benchmark::State& st) {
  const std::string text =
      "builtin U = urysohn;\nbuiltin RU = regularize(U);\nset A in U = grid(G; cols=0) | atom(pinf);\n"
      "builtin UA = restrict(U, A);\nspace Q3 { points: 1 2 3; vicinity 1: {1 2}; vicinity 2: {2 3}; }\n";
  for (auto _ : st) benchmark::DoNotOptimize(model::parse_model(text));
}
BENCHMARK(BM_parse_model);

}  // namespace
