#include <benchmark/benchmark.h>

#include <random>

#include "labgraph/gross_tucker.hpp"
#include "labgraph/range_lattice.hpp"

namespace labgraph {
namespace {

LabeledGraph Fish() {
  return LabeledGraph::FromEdges({"v", "w"}, {{"e", "v", "v", "1"}, {"f", "v", "w", "0"}, {"g", "w", "v", "0"}});
}

LabeledGraph Fish4() {
  return LabeledGraph::FromEdges({"v", "w"}, {{"vv", "v", "v", "1"},
                                              {"vw", "v", "w", "0"},
                                              {"wv", "w", "v", "0"},
                                              {"ww", "w", "w", "1"}});
}

SkewSpec SkewZ() {
  return SkewSpec(Fish(), Group::Integers(), {{"e", 1}, {"f", 1}, {"g", 1}}, {{"e", 0}, {"f", 0}, {"g", 0}});
}

SkewSpec Nofd() {
  return SkewSpec(Fish4(), Group::Integers(), {{"vv", 1}, {"vw", 1}, {"wv", 1}, {"ww", 1}},
                  {{"vv", 0}, {"vw", 0}, {"wv", -1}, {"ww", 2}});
}

LabeledGraph RandomGraph(std::mt19937_64& rng, int vertices, int edges, int letters) {
  std::vector<std::string> vs;
  for (int i = 0; i < vertices; ++i) vs.push_back("v" + std::to_string(i));
  std::vector<LabeledEdge> es;
  for (int i = 0; i < edges; ++i) {
    es.push_back({"e" + std::to_string(i), vs[rng() % vs.size()], vs[rng() % vs.size()],
                  std::string(1, static_cast<char>('a' + rng() % letters))});
  }
  return LabeledGraph::FromEdges(vs, es);
}

void BM_SkewMaterialize(benchmark::State& state) {
  const auto spec = SkewZ();
  const Window w{0, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(SkewProduct(spec, w));
}
BENCHMARK(BM_SkewMaterialize)->Range(8, 512);

void BM_SmallestAccommodating(benchmark::State& state) {
  const auto lg = SkewProduct(SkewZ(), Window{0, state.range(0)}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(SmallestAccommodating(lg));
}
BENCHMARK(BM_SmallestAccommodating)->DenseRange(1, 4);

void BM_WeaklyLeftResolvingFast(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto lg = RandomGraph(rng, 5, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(IsWeaklyLeftResolving(lg));
}
BENCHMARK(BM_WeaklyLeftResolvingFast);

void BM_WeaklyLeftResolvingBruteForce(benchmark::State& state) {
  const auto lg = SkewProduct(SkewZ(), Window{0, 2}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(IsWeaklyLeftResolvingBruteForce(lg, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WeaklyLeftResolvingBruteForce)->DenseRange(1, 4);

void BM_FundamentalDomainSearch(benchmark::State& state) {
  const Element h = state.range(0);
  const auto tau = LeftTranslation(SkewProduct(Nofd(), Window{-h, h}));
  for (auto _ : state) benchmark::DoNotOptimize(FindFundamentalDomain(tau));
}
BENCHMARK(BM_FundamentalDomainSearch)->DenseRange(1, 4);

void BM_Reconstruct(benchmark::State& state) {
  const Element h = state.range(0);
  const auto tau = LeftTranslation(SkewProduct(SkewZ(), Window{-h, h}));
  const SectionPack pack{{{"v", "(v,0)"}, {"w", "(w,0)"}}, {}, {}};
  for (auto _ : state) benchmark::DoNotOptimize(Reconstruct(tau, pack));
}
BENCHMARK(BM_Reconstruct)->RangeMultiplier(2)->Range(2, 16);

void BM_ReconstructLabelConsistentCyclic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto base = Fish();
  const SkewSpec spec(base, Group::Cyclic(n), {{"e", 1}, {"f", 1}, {"g", 1}}, {{"e", 0}, {"f", 1}, {"g", 1}});
  const auto tau = LeftTranslation(SkewProduct(spec));
  for (auto _ : state) benchmark::DoNotOptimize(ReconstructLabelConsistent(tau));
}
BENCHMARK(BM_ReconstructLabelConsistentCyclic)->RangeMultiplier(2)->Range(2, 32);

}  // namespace
}  // namespace labgraph

BENCHMARK_MAIN();
