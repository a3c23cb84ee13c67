#include <benchmark/benchmark.h>

#include "symkit/abp.hpp"
#include "symkit/pdc.hpp"
#include "symkit/symmetric.hpp"
#include "symkit/transforms.hpp"

using namespace symkit;

namespace {

const Partition kShape({3, 2, 1});

void BM_SchurBialternant(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schur_bialternant(kShape, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_SchurBialternant)->DenseRange(3, 6);

void BM_SchurJacobiTrudiH(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schur_jt_h(kShape, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_SchurJacobiTrudiH)->DenseRange(3, 6);

void BM_SchurJacobiTrudiE(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schur_jt_e(kShape, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_SchurJacobiTrudiE)->DenseRange(3, 6);

void BM_SchurTableaux(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(schur_ssyt(kShape, static_cast<std::size_t>(st.range(0))));
}
BENCHMARK(BM_SchurTableaux)->DenseRange(3, 6);

void BM_DetAbpExpand(benchmark::State& st) {
  const ABP a = det_abp(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(abp_expand(a));
  st.counters["nodes"] = static_cast<double>(a.num_nodes());
}
BENCHMARK(BM_DetAbpExpand)->DenseRange(2, 5);

void BM_HomogeneousComponent(benchmark::State& st) {
  const Formula f = schur_jt_formula(Partition({2, 1}), static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(homogeneous_component_formula(f, 3, 3U));
}
BENCHMARK(BM_HomogeneousComponent)->DenseRange(3, 5);

void BM_SchurToDet(benchmark::State& st) {
  const std::pair<Partition, std::size_t> cases[] = {{Partition({3, 2}), 5}, {Partition({4, 2}), 6}, {Partition({6, 3}), 8}};
  const auto& [lam, n] = cases[st.range(0)];
  const Formula f = schur_jt_formula(lam, n);
  std::uint64_t out = 0;
  for (auto _ : st) out = formula_size(schur_to_det_reduce(lam, n, f).formula);
  st.counters["size_in"] = static_cast<double>(formula_size(f));
  st.counters["size_out"] = static_cast<double>(out);
}
BENCHMARK(BM_SchurToDet)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_PdcMonomial(benchmark::State& st) {
  const std::size_t k = static_cast<std::size_t>(st.range(0));
  Poly p = Poly::constant(k, 1);
  for (std::size_t i = 0; i < k; ++i) p = p * Poly::variable(k, i);
  for (auto _ : st) benchmark::DoNotOptimize(pdc_dimension(p));
}
BENCHMARK(BM_PdcMonomial)->DenseRange(2, 6, 2);

}  // namespace
BENCHMARK_MAIN();
