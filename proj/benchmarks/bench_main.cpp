#include <benchmark/benchmark.h>

#include "mf/endo.hpp"
#include "mf/factorization.hpp"
#include "mf/quat_order.hpp"
#include "mf/regularity.hpp"
#include "mf/ring_spec.hpp"

namespace {

void BM_BuildMatrixRing(benchmark::State& state) {
  for (auto _ : state) {
    const mf::FiniteRing r = mf::build_ring("mat:2:zmod:3");
    benchmark::DoNotOptimize(r.idempotent_list().size());
  }
}
BENCHMARK(BM_BuildMatrixRing)->Unit(benchmark::kMillisecond);

void BM_CoversVsRegularity(benchmark::State& state) {
  const mf::FiniteRing r = mf::build_ring("zmod:12");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::covers_vs_regularity(mf::RingHandle{r}).checks.size());
  }
}
BENCHMARK(BM_CoversVsRegularity)->Unit(benchmark::kMillisecond);

void BM_EnumerateFactorizations(benchmark::State& state) {
  const auto ctx = mf::skew_context(2, 2, 1);
  const std::vector<mf::SkewPoly> polys = mf::monic_of_degree(ctx, state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < polys.size(); i += 7) {
      total += mf::enumerate_factorizations(polys[i]).size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateFactorizations)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ElementsOfNorm(benchmark::State& state) {
  const mf::OrderLattice whole = mf::OrderLattice::whole();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mf::elements_of_norm(whole, state.range(0)).size());
  }
}
BENCHMARK(BM_ElementsOfNorm)->Arg(1)->Arg(9)->Arg(81)->Unit(benchmark::kMicrosecond);

void BM_EndoRing(benchmark::State& state) {
  const std::vector<mf::EndoCorpusEntry> corpus = mf::endo_corpus();
  const mf::FiniteModule& m = corpus.at(state.range(0)).module;
  for (auto _ : state) {
    const mf::EndoRing e(m);
    benchmark::DoNotOptimize(e.size());
  }
}
BENCHMARK(BM_EndoRing)->Arg(0)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
