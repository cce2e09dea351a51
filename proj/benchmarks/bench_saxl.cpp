#include <benchmark/benchmark.h>

#include "saxl/criteria.hpp"
#include "saxl/engine.hpp"

namespace {

using saxl::Family;

void BM_C2Action(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(saxl::psl2_c2_action({Family::PSigmaL2, q}));
}
BENCHMARK(BM_C2Action)->Arg(25)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_BaseNeighbourhood(benchmark::State& state) {
  const auto action = saxl::psl2_c2_action({Family::PSL2, static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(saxl::BaseNeighbourhood(action));
}
BENCHMARK(BM_BaseNeighbourhood)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_SaxlGraph(benchmark::State& state) {
  const saxl::BaseNeighbourhood nb(saxl::psl2_c3_action({Family::PSL2, static_cast<std::uint32_t>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(saxl::SaxlGraph::build(nb));
}
BENCHMARK(BM_SaxlGraph)->Arg(27)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_QHat(benchmark::State& state) {
  const auto action = saxl::psl2_c2_action({Family::PGL2, static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(saxl::q_hat(saxl::fuse_prime_classes(action)));
}
BENCHMARK(BM_QHat)->Arg(13)->Arg(27)->Unit(benchmark::kMillisecond);

void BM_MaxClique(benchmark::State& state) {
  const auto graph = saxl::SaxlGraph::build(
      saxl::BaseNeighbourhood(saxl::psl2_c3_action({Family::PSigmaL2, static_cast<std::uint32_t>(state.range(0))})));
  for (auto _ : state) benchmark::DoNotOptimize(saxl::max_clique_vertex_transitive(graph));
}
BENCHMARK(BM_MaxClique)->Arg(9)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_CriteriaRelation(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const saxl::CriteriaBaseRelation rel(saxl::Psl2Model::C2, {Family::PSigmaL2, q});
  const auto labels = saxl::c2_point_labels(q);
  std::size_t i = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rel.is_base(labels[i], labels[(i + 1 + (i * 7) % (labels.size() - 1)) % labels.size()]));
    i = i % (labels.size() - 1) + 1;
  }
}
BENCHMARK(BM_CriteriaRelation)->Arg(121)->Arg(169);

void BM_CriteriaClique(benchmark::State& state) {
  const saxl::GroupVariant v{Family::PSigmaL2, static_cast<std::uint32_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(saxl::criteria_clique(saxl::Psl2Model::C3, v, 5));
}
BENCHMARK(BM_CriteriaClique)->Arg(81)->Arg(169)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
