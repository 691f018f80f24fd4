#include "hitcalc/gf2.hpp"
#include "hitcalc/hit_solver.hpp"
#include "hitcalc/steenrod.hpp"

#include <benchmark/benchmark.h>

using namespace hitcalc;

namespace {

void BM_Cohit(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohit(4, n).dimension);
    state.SetLabel("k=4");
}
BENCHMARK(BM_Cohit)->Arg(13)->Arg(21)->Arg(29)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_CohitAccelerated(benchmark::State& state)
{
    SolverOptions fast;
    fast.accelerated = true;
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(cohit(4, n, fast).dimension);
}
BENCHMARK(BM_CohitAccelerated)->Arg(21)->Arg(29)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_Sq(benchmark::State& state)
{
    const Monomial m{7, 11, 13, 29};
    const auto i = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sq(i, m));
}
BENCHMARK(BM_Sq)->Arg(1)->Arg(4)->Arg(16)->Arg(32);

void BM_GeneratorImages(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hit_generator_images(4, n).entries.size());
}
BENCHMARK(BM_GeneratorImages)->Arg(21)->Arg(37)->Unit(benchmark::kMillisecond);

void BM_Echelon(benchmark::State& state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    const ColumnUniverse u = ColumnUniverse::of_degree(4, n);
    std::vector<std::vector<Column>> rows;
    for (const auto& e : hit_generator_images(4, n).entries) {
        std::vector<Column> r;
        for (const Monomial& t : e.image.terms())
            r.push_back(u.column_of(t));
        rows.push_back(std::move(r));
    }
    for (auto _ : state) {
        SparseEchelon s(u.size());
        for (const auto& r : rows)
            s.insert(r);
        benchmark::DoNotOptimize(s.rank());
    }
    state.counters["columns"] = static_cast<double>(u.size());
}
BENCHMARK(BM_Echelon)->Arg(21)->Arg(29)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
