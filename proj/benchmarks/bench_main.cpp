#include <benchmark/benchmark.h>

#include "finj/combinatorics.hpp"
#include "finj/em_walk.hpp"
#include "finj/generators.hpp"
#include "finj/sads.hpp"
#include "finj/sts.hpp"

namespace {

void BM_TransitiveScan(benchmark::State& state) {
  finj::Rng rng(1);
  auto n = static_cast<finj::Vertex>(state.range(0));
  finj::Tournament t = finj::random_tournament(n, rng);
  finj::VertexList all(n);
  for (finj::Vertex i = 0; i < n; ++i) all[i] = i;
  for (auto _ : state) benchmark::DoNotOptimize(finj::is_transitive(t, all));
}
BENCHMARK(BM_TransitiveScan)->Arg(256)->Arg(1024);

void BM_MaxTransitive(benchmark::State& state) {
  finj::Rng rng(2);
  finj::Tournament t = finj::random_tournament(16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(finj::max_transitive_subtournament(t));
}
BENCHMARK(BM_MaxTransitive);

void BM_LongestMonotone(benchmark::State& state) {
  finj::Rng rng(3);
  finj::LinearOrderPrefix l = finj::gen_split_order(static_cast<finj::Vertex>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(finj::longest_monotone(l));
}
BENCHMARK(BM_LongestMonotone)->Arg(500)->Arg(2000);

void BM_StsEngine(benchmark::State& state) {
  finj::Rng rng(4);
  finj::CandidateFamily z;
  for (int e = 0; e < 8; ++e)
    z.push_back(finj::Candidate::fixed(finj::gen_window_hitting(10000, 64, rng), 10000));
  for (auto _ : state) benchmark::DoNotOptimize(finj::run_sts(z, 4, 10000));
}
BENCHMARK(BM_StsEngine);

void BM_SadsEngine(benchmark::State& state) {
  finj::Rng rng(5);
  finj::CandidateFamily z;
  for (int e = 0; e < 4; ++e)
    z.push_back(finj::Candidate::approximated(finj::gen_membership(1500, 3, 750, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(finj::run_sads(z, 1500));
}
BENCHMARK(BM_SadsEngine);

void BM_EmWalk(benchmark::State& state) {
  std::vector<finj::SeededTournament> ts = {{65536, 11}, {65536, 12}};
  finj::WalkParams params;
  params.target = 16;
  params.chunk = 64;
  params.arrivals = {0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(finj::em_walk(ts, 65536, params));
}
BENCHMARK(BM_EmWalk);

}  // namespace

BENCHMARK_MAIN();
