// Microbenchmarks for the two hot kernels: co-occurrence counting and the
// all-pairs chi-square distance matrix.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "texdefect/dissimilarity.hpp"
#include "texdefect/glcm.hpp"

using namespace texdefect;

namespace {

GrayImage random_block(std::mt19937& rng, int side, int levels) {
    std::uniform_int_distribution<int> pick(0, levels - 1);
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(side) * side);
    for (auto& px : pixels) px = static_cast<std::uint8_t>(pick(rng));
    return GrayImage(side, side, levels, std::move(pixels));
}

std::vector<JointHistogram> random_signatures(int n, int side, int levels) {
    std::mt19937 rng(1);
    const auto offsets = default_offsets();
    std::vector<JointHistogram> signatures;
    signatures.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        signatures.push_back(block_signature(random_block(rng, side, levels), offsets));
    }
    return signatures;
}

void BM_ComputeGlcm(benchmark::State& state) {
    std::mt19937 rng(1);
    const int side = static_cast<int>(state.range(0));
    const GrayImage block = random_block(rng, side, 64);
    const Offset off{0, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_glcm(block, off));
    }
    state.SetItemsProcessed(state.iterations() * side * (side - 1));
}
BENCHMARK(BM_ComputeGlcm)->Arg(16)->Arg(32)->Arg(64);

void BM_BlockSignature(benchmark::State& state) {
    std::mt19937 rng(1);
    const int side = static_cast<int>(state.range(0));
    const GrayImage block = random_block(rng, side, 64);
    const auto offsets = default_offsets();
    for (auto _ : state) {
        benchmark::DoNotOptimize(block_signature(block, offsets));
    }
}
BENCHMARK(BM_BlockSignature)->Arg(16)->Arg(32)->Arg(64);

void BM_ChiSquareDistance(benchmark::State& state) {
    const auto signatures = random_signatures(2, 32, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chi_square_distance(signatures[0], signatures[1]));
    }
    state.SetItemsProcessed(state.iterations() * 64 * 64);
}
BENCHMARK(BM_ChiSquareDistance);

void BM_DissimilarityMatrix(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto signatures = random_signatures(n, 32, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dissimilarity_matrix(signatures));
    }
    state.SetItemsProcessed(state.iterations() * n * (n - 1) / 2);
}
BENCHMARK(BM_DissimilarityMatrix)->Arg(16)->Arg(64)->Arg(128);

} // namespace

BENCHMARK_MAIN();
