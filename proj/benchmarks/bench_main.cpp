#include "lllshift/separated.hpp"
#include "lllshift/shift.hpp"
#include "lllshift/solve.hpp"

#include <benchmark/benchmark.h>

using namespace lllshift;

namespace {

ElementSet range(std::int64_t lo, std::int64_t hi)
{
    std::vector<GroupElement> out;
    for (auto i = lo; i <= hi; ++i)
        out.push_back({i});
    return ElementSet(std::move(out));
}

void bm_ell0(benchmark::State& state)
{
    const auto k = static_cast<Symbol>(state.range(0));
    const auto d = static_cast<std::size_t>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_ell0(k, d));
}
BENCHMARK(bm_ell0)->Args({2, 1})->Args({2, 3})->Args({3, 4})->Args({10, 6});

void bm_build_cyclic(benchmark::State& state)
{
    const auto m = state.range(0);
    const auto config = make_shift_config(GroupContext::cyclic({m}), Pattern({{0}}, {0}, 2), range(0, 7), 0, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_instance(config));
}
BENCHMARK(bm_build_cyclic)->Arg(100)->Arg(1000);

void bm_moser_tardos_cyclic(benchmark::State& state)
{
    const auto m = state.range(0);
    const auto config = make_shift_config(GroupContext::cyclic({m}), Pattern({{0}, {1}}, {1, 0}, 2), range(0, 63), 0, 0);
    const auto built = build_instance(config);
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_moser_tardos(built.instance, {.seed = seed++}));
}
BENCHMARK(bm_moser_tardos_cyclic)->Arg(200)->Arg(2000);

void bm_left_separated_lattice(benchmark::State& state)
{
    auto z2 = GroupContext::lattice(2);
    const auto f = z2.ball(static_cast<std::size_t>(state.range(0)));
    const auto d = z2.ball(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(left_separated_subset(z2, f, d));
}
BENCHMARK(bm_left_separated_lattice)->Arg(5)->Arg(10)->Arg(20);

} // namespace

BENCHMARK_MAIN();
