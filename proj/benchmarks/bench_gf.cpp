#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <veron/gf.hpp>

using namespace veron;

namespace {

std::vector<FieldElement> random_elements(const Field& f, std::size_t n, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
    std::vector<FieldElement> out(n);
    for (auto& e : out) e = {dist(rng)};
    return out;
}

void BM_field_mul(benchmark::State& state, Field f) {
    const auto xs = random_elements(f, 4096, 1);
    const auto ys = random_elements(f, 4096, 2);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.mul(xs[i & 4095], ys[i & 4095]));
        ++i;
    }
}

void BM_field_inv(benchmark::State& state, Field f) {
    auto xs = random_elements(f, 4096, 3);
    for (auto& e : xs)
        if (f.is_zero(e)) e = f.one();
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(f.inv(xs[i & 4095]));
        ++i;
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_field_mul, gf2, Field(2, 1));
BENCHMARK_CAPTURE(BM_field_mul, gf16, Field(2, 4));
BENCHMARK_CAPTURE(BM_field_mul, gf256, Field(2, 8));
BENCHMARK_CAPTURE(BM_field_mul, gf2048_no_tables, Field(2, 11));
BENCHMARK_CAPTURE(BM_field_inv, gf16, Field(2, 4));
BENCHMARK_CAPTURE(BM_field_inv, gf2048_no_tables, Field(2, 11));
