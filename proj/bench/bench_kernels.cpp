#include <benchmark/benchmark.h>

#include "selfsim/catalog.hpp"
#include "selfsim/cyclic.hpp"
#include "selfsim/solver.hpp"

using namespace selfsim;

// Serial reference vs OpenMP kernels on the truncated-wreath-product search
// paths: ambient commutant scans, subgroup closure, and the levelwise solver.

namespace {

std::vector<std::pair<Portrait, Portrait>> adding_pairs(int depth) {
    Automorphism a = adding_machine(2);
    OrbitPartition part = activity_orbits({a});
    std::vector<std::pair<Portrait, Portrait>> pairs;
    for (const auto& g : delta_closure({a}, part, 2)) {
        Portrait p = g.portrait(depth);
        pairs.emplace_back(p, p);
    }
    return pairs;
}

std::vector<std::pair<Portrait, Portrait>> double_adding_pairs(int depth) {
    Automorphism a = multi_adding_machine(2, 2);
    OrbitPartition part = activity_orbits({a});
    std::vector<std::pair<Portrait, Portrait>> pairs;
    for (const auto& g : delta_closure({a}, part, 1)) {
        Portrait p = g.portrait(depth);
        pairs.emplace_back(p, p);
    }
    return pairs;
}

std::vector<Portrait> closure_gens(int depth) {
    Automorphism a = multi_adding_machine(2, 2);
    OrbitPartition part = activity_orbits({a});
    return portraits_of(delta_closure(b_group({a}, part), part, depth), depth);
}

} // namespace

static void BM_scan_serial_t2_d4(benchmark::State& state) {
    AmbientSpec ambient = AmbientSpec::full(2, 4);
    auto pairs = adding_pairs(4);
    for (auto _ : state) benchmark::DoNotOptimize(intertwiner_scan_serial(ambient, pairs));
}
BENCHMARK(BM_scan_serial_t2_d4)->Unit(benchmark::kMillisecond);

static void BM_scan_parallel_t2_d4(benchmark::State& state) {
    AmbientSpec ambient = AmbientSpec::full(2, 4);
    auto pairs = adding_pairs(4);
    for (auto _ : state) benchmark::DoNotOptimize(intertwiner_scan_parallel(ambient, pairs));
}
BENCHMARK(BM_scan_parallel_t2_d4)->Unit(benchmark::kMillisecond);

static void BM_scan_serial_t4_d2(benchmark::State& state) {
    AmbientSpec ambient = AmbientSpec::full(4, 2);
    auto pairs = double_adding_pairs(2);
    for (auto _ : state) benchmark::DoNotOptimize(intertwiner_scan_serial(ambient, pairs));
}
BENCHMARK(BM_scan_serial_t4_d2)->Unit(benchmark::kMillisecond);

static void BM_scan_parallel_t4_d2(benchmark::State& state) {
    AmbientSpec ambient = AmbientSpec::full(4, 2);
    auto pairs = double_adding_pairs(2);
    for (auto _ : state) benchmark::DoNotOptimize(intertwiner_scan_parallel(ambient, pairs));
}
BENCHMARK(BM_scan_parallel_t4_d2)->Unit(benchmark::kMillisecond);

static void BM_closure_serial(benchmark::State& state) {
    auto gens = closure_gens(3);
    for (auto _ : state) benchmark::DoNotOptimize(closure_serial(4, 3, gens));
}
BENCHMARK(BM_closure_serial)->Unit(benchmark::kMillisecond);

static void BM_closure_parallel(benchmark::State& state) {
    auto gens = closure_gens(3);
    for (auto _ : state) benchmark::DoNotOptimize(closure_parallel(4, 3, gens));
}
BENCHMARK(BM_closure_parallel)->Unit(benchmark::kMillisecond);

static void BM_solver_serial(benchmark::State& state) {
    Automorphism a = multi_adding_machine(2, 2);
    OrbitPartition part = activity_orbits({a});
    auto dc = delta_closure({a}, part, 3);
    for (auto _ : state) {
        IntertwinerProblem problem;
        problem.m = 4;
        problem.depth = 3;
        for (const auto& g : dc) {
            Portrait p = g.portrait(3);
            problem.pairs.emplace_back(p, p);
        }
        benchmark::DoNotOptimize(solve_all(problem, kSolutionGuard, false));
    }
}
BENCHMARK(BM_solver_serial)->Unit(benchmark::kMillisecond);

static void BM_solver_parallel_roots(benchmark::State& state) {
    Automorphism a = multi_adding_machine(2, 2);
    OrbitPartition part = activity_orbits({a});
    auto dc = delta_closure({a}, part, 3);
    for (auto _ : state) {
        IntertwinerProblem problem;
        problem.m = 4;
        problem.depth = 3;
        for (const auto& g : dc) {
            Portrait p = g.portrait(3);
            problem.pairs.emplace_back(p, p);
        }
        benchmark::DoNotOptimize(solve_all(problem, kSolutionGuard, true));
    }
}
BENCHMARK(BM_solver_parallel_roots)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
