#include <benchmark/benchmark.h>

#include <veron/veronese.hpp>

using namespace veron;

namespace {

void BM_dual_power_matrix(benchmark::State& state, Field f, std::uint32_t m, std::uint32_t t) {
    const VeroContext ctx(f, m, t);
    for (auto _ : state) benchmark::DoNotOptimize(dual_power_matrix(ctx).rows());
}

void BM_nucleus_bruteforce(benchmark::State& state, Field f, std::uint32_t m, std::uint32_t t) {
    const VeroContext ctx(f, m, t);
    for (auto _ : state) benchmark::DoNotOptimize(nucleus_bruteforce(ctx).dim());
}

void BM_verify(benchmark::State& state, std::uint32_t p, std::uint32_t k, std::uint32_t m,
               std::uint32_t t) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_nucleus(p, k, m, t).ok());
}

void BM_symmetric_power_map(benchmark::State& state, Field f, std::uint32_t m, std::uint32_t t) {
    const VeroContext ctx(f, m, t);
    const MatrixF id = MatrixF::identity(f, m + 1);
    for (auto _ : state) benchmark::DoNotOptimize(symmetric_power_map(ctx, id).rows());
}

}  // namespace

BENCHMARK_CAPTURE(BM_dual_power_matrix, gf16_m3_t6, Field(2, 4), 3, 6);
BENCHMARK_CAPTURE(BM_nucleus_bruteforce, gf4_m2_t3, Field(2, 2), 2, 3);
BENCHMARK_CAPTURE(BM_nucleus_bruteforce, gf16_m3_t6, Field(2, 4), 3, 6);
BENCHMARK_CAPTURE(BM_nucleus_bruteforce, gf9_m3_t6, Field(3, 2), 3, 6);
BENCHMARK_CAPTURE(BM_verify, gf16_m3_t6, 2, 4, 3, 6);
BENCHMARK_CAPTURE(BM_symmetric_power_map, gf5_m3_t4, Field(5, 1), 3, 4);
