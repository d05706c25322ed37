#include <benchmark/benchmark.h>

#include "critex/automaton.hpp"
#include "critex/pants.hpp"
#include "critex/pressure.hpp"
#include "critex/rep.hpp"

namespace {

using namespace critex;

const Functional kPhi = functional_from_roots(1.0, 1.0);

FGParams shear6() { return shear_family(6.0, FGParams{}); }

void BM_Svd3(benchmark::State& state) {
  const Mat m = mat3(1.2, -0.3, 0.8, 0.1, 2.5, -1.1, 0.7, 0.2, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(singular_values(m));
}
BENCHMARK(BM_Svd3);

void BM_EigenData3(benchmark::State& state) {
  const Mat m = mat3(1.2, -0.3, 0.8, 0.1, 2.5, -1.1, 0.7, 0.2, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(eigen_data(m));
}
BENCHMARK(BM_EigenData3);

void BM_WordStateExtend(benchmark::State& state) {
  const PantsHolonomy h = holonomy(shear6());
  const Mat& a = h.rep.matrix("a");
  WordState st = WordState::start(3);
  for (auto _ : state) {
    st = st.extend(a);
    benchmark::DoNotOptimize(st.kappa());
  }
}
BENCHMARK(BM_WordStateExtend);

void BM_PressureAbc(benchmark::State& state) {
  const LabeledGraph g = builtin_f2_abc();
  for (auto _ : state)
    benchmark::DoNotOptimize(pressure_edge_weighted(g, [](const Edge&) { return 0.0; }).value);
}
BENCHMARK(BM_PressureAbc);

void BM_SolveExponent(benchmark::State& state) {
  const LabeledGraph g = builtin_f2_abc();
  for (auto _ : state)
    benchmark::DoNotOptimize(solve_exponent(g, [](const Edge&) { return 1.0; }));
}
BENCHMARK(BM_SolveExponent);

void BM_DepthK(benchmark::State& state) {
  const PantsHolonomy h = holonomy(shear6());
  const LabeledGraph g = builtin_f2_abc();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(busemann_depth_k_exponent(h.rep, kPhi, g, k));
}
BENCHMARK(BM_DepthK)->Arg(1)->Arg(2);

void BM_Certify(benchmark::State& state) {
  const PantsHolonomy h = holonomy(shear6());
  const LabeledGraph g = builtin_f2_abc();
  for (auto _ : state) benchmark::DoNotOptimize(certify_separation(h.rep, g, 0.1).pass);
}
BENCHMARK(BM_Certify);

}  // namespace

BENCHMARK_MAIN();
