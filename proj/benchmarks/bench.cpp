#include <benchmark/benchmark.h>

#include <random>

#include "ethicdual/graph.hpp"
#include "ethicdual/integer_duality.hpp"
#include "ethicdual/lp.hpp"
#include "ethicdual/normal_form.hpp"

using namespace ethicdual;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t n, long max_abs) {
    std::uniform_int_distribution<long> d(-max_abs, max_abs);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

Graph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937 rng(1);
    IntMatrix a = random_matrix(rng, state.range(0), 9);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void bm_spanning_tree_count(benchmark::State& state) {
    Graph g = complete(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(spanning_tree_count(g));
}
BENCHMARK(bm_spanning_tree_count)->Arg(6)->Arg(10)->Arg(16);

void bm_dhar_reduce(benchmark::State& state) {
    Graph g = complete(state.range(0));
    Divisor d{IntVec(g.vertex_count())};
    d.values[0] = 3 * static_cast<long>(g.vertex_count());
    for (auto _ : state) benchmark::DoNotOptimize(dhar_reduce(g, d, 0));
}
BENCHMARK(bm_dhar_reduce)->Arg(6)->Arg(12);

void bm_lp_solve(benchmark::State& state) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<long> val(-9, 9);
    std::size_t n = state.range(0), m = n / 2;
    RatMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = val(rng);
    RatVec x0(n);
    for (auto& v : x0) v = (val(rng) + 9) / 2;  // feasible instance
    RatVec b = a * x0;
    RatVec c(n);
    for (auto& v : c) v = val(rng);
    LinearProgram p = LinearProgram::standard(c, a, b);
    for (auto _ : state) benchmark::DoNotOptimize(lp_solve(p));
}
BENCHMARK(bm_lp_solve)->Arg(8)->Arg(16)->Arg(24);

void bm_discrete_farkas(benchmark::State& state) {
    IntMatrix a(2, 3);
    long k = state.range(0);
    a(0, 0) = 2; a(0, 1) = 3; a(0, 2) = 1;
    a(1, 0) = 1; a(1, 1) = 0; a(1, 2) = 4;
    IntVec b{k, k};
    for (auto _ : state) benchmark::DoNotOptimize(discrete_farkas(a, b));
}
BENCHMARK(bm_discrete_farkas)->Arg(5)->Arg(10)->Arg(15);

}  // namespace

BENCHMARK_MAIN();
