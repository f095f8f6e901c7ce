#include <benchmark/benchmark.h>

#include <random>

#include "apolar/compressed.hpp"
#include "apolar/homology.hpp"

using namespace apolar;

namespace {

constexpr std::uint32_t P = 32003;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    Matrix m(rows, cols, P);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, static_cast<std::int64_t>(rng() % P));
    return m;
}

std::shared_ptr<const GradedArtinianAlgebra> generic_algebra(int e, int s) {
    DualGenerator f = sample_dual_generator(e, s, P, 1);
    return std::make_shared<const GradedArtinianAlgebra>(GradedArtinianAlgebra::from_dual_generator(f));
}

void BM_echelon(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m = random_matrix(n, 2 * n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.echelon().pivots.size());
}
BENCHMARK(BM_echelon)->Arg(64)->Arg(128)->Arg(256);

void BM_kernel(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m = random_matrix(n / 2, n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.kernel_basis().size());
}
BENCHMARK(BM_kernel)->Arg(128)->Arg(256);

void BM_build_algebra(benchmark::State& state) {
    DualGenerator f = sample_dual_generator(3, 4, P, 1);
    for (auto _ : state) {
        GradedArtinianAlgebra r = GradedArtinianAlgebra::from_dual_generator(f);
        benchmark::DoNotOptimize(r.length());
    }
}
BENCHMARK(BM_build_algebra);

void BM_koszul_betti(benchmark::State& state) {
    auto r = generic_algebra(3, 4);
    FiniteModule m = FiniteModule::of_algebra(r);
    for (auto _ : state) benchmark::DoNotOptimize(koszul_betti(r->ring(), m).total(1));
}
BENCHMARK(BM_koszul_betti);

void BM_residue_resolution(benchmark::State& state) {
    auto r = generic_algebra(3, 4);
    auto backend = std::make_shared<const RingBackend>(RingBackend::artinian(r));
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        GradedResolution res = minimal_resolution(backend, FiniteModule::residue_field(3, P), n);
        benchmark::DoNotOptimize(res.total_betti().back());
    }
}
BENCHMARK(BM_residue_resolution)->Arg(3)->Arg(4);

void BM_annihilator_chain(benchmark::State& state) {
    auto r = generic_algebra(3, 4);
    for (auto _ : state) {
        GradedIdeal ann = annihilator(*r, power_ideal(*r, 3));
        benchmark::DoNotOptimize(ann.total_dim());
    }
}
BENCHMARK(BM_annihilator_chain);

} // namespace

BENCHMARK_MAIN();
