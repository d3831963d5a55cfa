#include "momentcone/kronecker.hpp"
#include "momentcone/oracle.hpp"

#include <benchmark/benchmark.h>

using namespace momentcone;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) ? "parallel" : "serial"); }

void BM_ExtremalEdges(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(extremal_edges(3, 4, mode(s)));
  label(s);
}
BENCHMARK(BM_ExtremalEdges)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CandidateStages(benchmark::State& s) {
  const Representation rep = kronecker_rep(3, 3, 4);
  const EdgeSet e33 = extremal_edges(3, 3), e34 = extremal_edges(3, 4);
  for (auto _ : s) {
    const auto eplus = tripartite_candidates(3, 3, 4, e33, e34, e34, mode(s));
    const auto adm = admissible_candidates(rep, eplus, mode(s));
    benchmark::DoNotOptimize(orbit_candidates(rep, adm, mode(s)));
  }
  label(s);
}
BENCHMARK(BM_CandidateStages)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Pipeline333(benchmark::State& s) {
  KroneckerOptions opts;
  opts.exec = mode(s);
  for (auto _ : s) benchmark::DoNotOptimize(compute_kronecker(3, 3, 3, opts));
  label(s);
}
BENCHMARK(BM_Pipeline333)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Sampling444(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(sample_spectra(4, 4, 4, 2000, 7, mode(s)));
  label(s);
}
BENCHMARK(BM_Sampling444)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
