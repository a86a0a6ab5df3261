// Serial reference kernels against their OpenMP versions.

#include "clustertrop/glsseed.hpp"
#include "clustertrop/lattice.hpp"
#include "clustertrop/search.hpp"

#include <benchmark/benchmark.h>

using namespace clustertrop;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

RationalPolytope cross_polytope(int m, int r) {
  std::vector<RationalVector> pts;
  for (int i = 0; i < m; ++i)
    for (int s : {-r, r}) {
      RationalVector u(m, Rational(0));
      u[i] = s;
      pts.push_back(u);
    }
  return RationalPolytope::hull(pts);
}

ExchangeMatrix c3_restricted() {
  const auto c3 = gls_exchange_matrix(parse_cartan_type("C3"), parse_word("3,2,3,2,1,2,3,2,1"));
  const std::vector<Label> keep{1, 2, 3, 6, 8};
  return restrict_to(c3, keep);
}

void BM_LatticeCount(benchmark::State& state) {
  const auto p = cross_polytope(4, 6);
  for (auto _ : state) benchmark::DoNotOptimize(lattice_point_count(p, 2, exec_of(state)));
}

void BM_ClassBfs(benchmark::State& state) {
  const auto d4 = gls_exchange_matrix(parse_cartan_type("D4"), parse_word("2,4,1,2,4,3,2,4,1,2,3,4"));
  const std::vector<Label> keep{1, 2, 3, 4};
  const auto eps = restrict_to(d4, keep);
  for (auto _ : state) benchmark::DoNotOptimize(mutation_class_bfs(eps, 100000, 100, exec_of(state)).explored);
}

void BM_LargeEntry(benchmark::State& state) {
  const auto eps = c3_restricted();
  LargeEntryOptions opts;
  opts.beam = 256;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(large_entry_search(eps, 40, opts));
}

}  // namespace

BENCHMARK(BM_LatticeCount)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassBfs)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LargeEntry)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
