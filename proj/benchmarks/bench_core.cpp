#include "peca/compile.hpp"
#include "peca/damage.hpp"
#include "peca/evolve.hpp"
#include "peca/fractal.hpp"
#include "peca/photonic.hpp"

#include <benchmark/benchmark.h>

using namespace peca;

namespace {

void BM_StepPacked(benchmark::State& state) {
    const auto width = static_cast<std::size_t>(state.range(0));
    const auto rule = RuleTable::from_number(30);
    auto g = Generation::random(width, 1, Boundary::Periodic);
    for (auto _ : state) {
        g = step_packed(g, rule);
        benchmark::DoNotOptimize(g);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_StepPacked)->Arg(1 << 10)->Arg(1 << 16)->Arg(1 << 20);

void BM_StepScalar(benchmark::State& state) {
    const auto width = static_cast<std::size_t>(state.range(0));
    const auto rule = RuleTable::from_number(30);
    auto g = Generation::random(width, 1, Boundary::Periodic);
    for (auto _ : state) {
        g = step(g, rule);
        benchmark::DoNotOptimize(g);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_StepScalar)->Arg(1 << 10)->Arg(1 << 16);

void BM_PhotonicStep(benchmark::State& state) {
    const auto width = static_cast<std::size_t>(state.range(0));
    const PhotonicConfig cfg{{1.0, -0.6, -0.6}, 0.25, {}};
    const auto g = Generation::random(width, 1, Boundary::Periodic);
    for (auto _ : state) {
        auto result = photonic_step(g, cfg);
        benchmark::DoNotOptimize(result);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width));
}
BENCHMARK(BM_PhotonicStep)->Arg(1 << 10)->Arg(1 << 16);

void BM_CompileRule(benchmark::State& state) {
    const int rule = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto result = compile_rule(rule);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_CompileRule)->Arg(30)->Arg(110);

void BM_Census(benchmark::State& state) {
    for (auto _ : state) {
        auto census = feasibility_census(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(census);
    }
}
BENCHMARK(BM_Census)->Arg(11)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_BoxCounting(benchmark::State& state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const auto d = evolve(Generation::single_seed(2 * steps + 1), RuleTable::from_number(90),
                          steps);
    const auto sizes = default_box_sizes(steps / 4);
    for (auto _ : state) {
        auto report = box_counting_dimension(d, sizes);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_BoxCounting)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DamageSpreading(benchmark::State& state) {
    const auto steps = static_cast<std::size_t>(state.range(0));
    const std::size_t width = 2 * steps + 201;
    const auto rule = RuleTable::from_number(30);
    const auto init = Generation::random(width, 5);
    for (auto _ : state) {
        auto report = damage_spreading(rule, init, width / 2, steps);
        benchmark::DoNotOptimize(report);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(width) *
                            static_cast<std::int64_t>(steps) * 2);
}
BENCHMARK(BM_DamageSpreading)->Arg(400)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
