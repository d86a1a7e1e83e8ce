#include <benchmark/benchmark.h>

#include <random>

#include <veron/exlin.hpp>

using namespace veron;

namespace {

MatrixF random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
    MatrixF m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = {dist(rng)};
    return m;
}

void BM_rref(benchmark::State& state, Field f) {
    const auto rows = std::size_t(state.range(0));
    const auto cols = std::size_t(state.range(1));
    const MatrixF m = random_matrix(f, rows, cols, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
    state.SetItemsProcessed(std::int64_t(state.iterations()) * std::int64_t(rows * cols));
}

void BM_nullspace(benchmark::State& state, Field f) {
    const auto rows = std::size_t(state.range(0));
    const auto cols = std::size_t(state.range(1));
    const MatrixF m = random_matrix(f, rows, cols, 8);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace(m).dim());
}

}  // namespace

BENCHMARK_CAPTURE(BM_rref, gf2, Field(2, 1))->Args({256, 128})->Args({1024, 256})->Args({4096, 84});
BENCHMARK_CAPTURE(BM_rref, gf16, Field(2, 4))->Args({256, 128})->Args({4096, 84});
BENCHMARK_CAPTURE(BM_rref, gf9, Field(3, 2))->Args({256, 128})->Args({820, 84});
BENCHMARK_CAPTURE(BM_nullspace, gf16, Field(2, 4))->Args({4096, 84});
