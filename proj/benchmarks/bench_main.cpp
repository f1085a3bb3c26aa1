#include <benchmark/benchmark.h>

#include "prodquot/group.hpp"
#include "prodquot/ram_types.hpp"

namespace {

static void BM_AdmissibleTypeScan(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(prodquot::enumerate_admissible_types().size());
    }
}
BENCHMARK(BM_AdmissibleTypeScan);

static void BM_GroupConstruction(benchmark::State& state) {
    using prodquot::Perm;
    std::vector<Perm> gens{prodquot::parse_cycles("(0 1 2 3)", 4),
                           prodquot::parse_cycles("(0 1)", 4)};
    for (auto _ : state) {
        auto g = prodquot::PermGroup::from_generators(4, gens);
        benchmark::DoNotOptimize(g.order());
    }
}
BENCHMARK(BM_GroupConstruction);

}  // namespace

BENCHMARK_MAIN();
