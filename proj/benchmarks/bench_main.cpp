#include <benchmark/benchmark.h>

#include <random>

#include "predkit/algorithms.hpp"
#include "predkit/generators.hpp"
#include "predkit/harness.hpp"
#include "predkit/oracles.hpp"
#include "predkit/paging.hpp"
#include "predkit/paging_policies.hpp"
#include "predkit/reductions.hpp"

namespace {

using namespace predkit;

std::vector<PageId> trace_of(std::size_t n, std::int64_t pages) {
  std::mt19937_64 rng(n);
  std::vector<PageId> trace(n);
  for (PageId& p : trace) p = static_cast<PageId>(rng() % static_cast<std::uint64_t>(pages));
  return trace;
}

void BM_Lfd(benchmark::State& state) {
  auto trace = trace_of(static_cast<std::size_t>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(lfd(trace, 5).faults);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Lfd)->Range(256, 16384);

void BM_Fwz(benchmark::State& state) {
  auto trace = trace_of(static_cast<std::size_t>(state.range(0)), 16);
  BitString x = lfd_labels(trace, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fwz(trace, 5, x).faults);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fwz)->Range(256, 16384);

void BM_Fbb(benchmark::State& state) {
  auto trace = trace_of(static_cast<std::size_t>(state.range(0)), 16);
  BitString x = lfd_labels(trace, 5);
  for (auto _ : state) benchmark::DoNotOptimize(fbb(trace, 5, x).run.faults);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Fbb)->Range(256, 16384);

void BM_GreedyIr(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<Interval> iv(static_cast<std::size_t>(state.range(0)));
  for (Interval& i : iv) {
    std::int64_t l = static_cast<std::int64_t>(rng() % 10000);
    i = {l, l + static_cast<std::int64_t>(rng() % 50) + 1};
  }
  for (auto _ : state) benchmark::DoNotOptimize(greedy_ir_opt(iv).opt_cost);
}
BENCHMARK(BM_GreedyIr)->Range(64, 8192);

void BM_BruteForceIr(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Interval> iv(n);
  for (Interval& i : iv) {
    std::int64_t l = static_cast<std::int64_t>(rng() % 30);
    i = {l, l + static_cast<std::int64_t>(rng() % 8) + 1};
  }
  IrInstance inst{std::nullopt, {BitString(n), BitString(n), iv}};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst).opt_cost);
}
BENCHMARK(BM_BruteForceIr)->DenseRange(8, 16, 4);

void BM_SearchSpill(benchmark::State& state) {
  GeneratorConfig c;
  c.problem = ProblemKind::kSpill;
  c.n = static_cast<std::size_t>(state.range(0));
  c.k = 3;
  auto inst = std::get<SpillInstance>(gen_instance(c, 0));
  Graph g = Graph::from_arrivals(inst.data.requests);
  for (auto _ : state) benchmark::DoNotOptimize(search_spill_opt(g, 3).opt_cost);
}
BENCHMARK(BM_SearchSpill)->DenseRange(8, 20, 4);

void BM_AsgToBdvc(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  BitString x(n), xh(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.set(i, rng() & 1);
    xh.set(i, rng() & 1);
  }
  AsgInstance src{AsgLevel::finite(3), {x, xh, std::vector<AsgPrompt>(n)}};
  for (auto _ : state) benchmark::DoNotOptimize(red_asg_to_bdvc(src, ftp_factory<VertexArrival>()).alg_target);
}
BENCHMARK(BM_AsgToBdvc)->DenseRange(2, 6, 2);

void BM_CertifyFtpExhaustive(benchmark::State& state) {
  CertifyConfig c;
  c.generator.level = AsgLevel::finite(3);
  c.exhaustive_n = static_cast<std::size_t>(state.range(0));
  c.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(certify("ftp", CompetitiveClaim::parse("1,2,1", true), c).pass());
}
BENCHMARK(BM_CertifyFtpExhaustive)->DenseRange(4, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
