#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "tracemin/binary_matrix.hpp"
#include "tracemin/oracle.hpp"
#include "tracemin/primes.hpp"
#include "tracemin/psi.hpp"
#include "tracemin/spectral.hpp"
#include "tracemin/step_forms.hpp"

using namespace tracemin;

namespace {

// fixed-seed bit soup so the Gram matrix has full-ish rank
BinaryMatrix random_bits(int dim) {
    std::uint64_t x = 0x9e3779b97f4a7c15ull;
    std::vector<std::string> rows(std::size_t(dim), std::string(std::size_t(dim), '0'));
    for (auto& row : rows)
        for (auto& ch : row) {
            x = x * 6364136223846793005ull + 1442695040888963407ull;
            ch = (x >> 62) & 1 ? '1' : '0';
        }
    return BinaryMatrix::from_strings(rows);
}

}  // namespace

static void BM_dense_spectrum(benchmark::State& state) {
    const BinaryMatrix a = random_bits(int(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(singular_spectrum(a).trace_norm);
}
BENCHMARK(BM_dense_spectrum)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_closed_trace_norm(benchmark::State& state) {
    const TwoStepShape t{2, 899315, 1, 4};
    for (auto _ : state) benchmark::DoNotOptimize(two_step_trace_norm(t));
}
BENCHMARK(BM_closed_trace_norm);

static void BM_exhaustive_scan(benchmark::State& state) {
    const auto n = state.range(0), m = state.range(1);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_psi(n, m).psi);
}
BENCHMARK(BM_exhaustive_scan)->Args({3, 5})->Args({4, 8});

static void BM_primality(benchmark::State& state) {
    const std::uint64_t x = std::uint64_t(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(x));
}
BENCHMARK(BM_primality)->Arg(1000003)->Arg(3597263);

static void BM_triple_search(benchmark::State& state) {
    const auto k_max = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(search_triples(1, k_max, -1).size());
}
BENCHMARK(BM_triple_search)->Arg(1000)->Arg(10000);

static void BM_psi_full_board(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) {
        double acc = 0;
        for (std::int64_t m = 1; m <= n * n; ++m) acc += psi(n, m).value();
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_psi_full_board)->Arg(30)->Arg(100);

// the packaged benchmark_main archive carries stale LTO bytecode, so the
// entry point lives here and only the shared library is linked
BENCHMARK_MAIN();
