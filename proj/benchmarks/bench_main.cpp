#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixmahon/enumeration.hpp"
#include "fixmahon/f3.hpp"
#include "fixmahon/phi.hpp"
#include "fixmahon/qseries.hpp"
#include "fixmahon/verify.hpp"
#include "fixmahon/zder.hpp"

using namespace fixmahon;

namespace {

// ZDer images of random permutations: Pos is a derangement, so Φ applies.
std::vector<Word> sample_words(std::size_t n, std::size_t count) {
    std::mt19937_64 rng(7);
    std::vector<std::uint32_t> values(n);
    std::vector<Word> out;
    for (std::size_t k = 0; k < count; ++k) {
        for (std::size_t i = 0; i < n; ++i) values[i] = static_cast<std::uint32_t>(i + 1);
        std::shuffle(values.begin(), values.end(), rng);
        out.push_back(zder(Permutation(values)));
    }
    return out;
}

}  // namespace

static void BM_Phi(benchmark::State& state) {
    const auto words = sample_words(static_cast<std::size_t>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(phi(words[i++ % words.size()]));
}
BENCHMARK(BM_Phi)->Arg(8)->Arg(16)->Arg(32);

static void BM_F3(benchmark::State& state) {
    const auto words = sample_words(static_cast<std::size_t>(state.range(0)), 64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(f3(words[i++ % words.size()]));
}
BENCHMARK(BM_F3)->Arg(8)->Arg(16)->Arg(32);

static void BM_PermStats(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t sum = 0;
        for_each_permutation(n, [&](const Permutation& p) { sum += perm_stats(p).maf; });
        benchmark::DoNotOptimize(sum);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(factorial(n)));
}
BENCHMARK(BM_PermStats)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Verify(benchmark::State& state) {
    VerifyOptions o;
    o.n_max = 6;
    o.jobs = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_claim(Claim::PermutationMaps, o));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SeriesIdentity(benchmark::State& state) {
    const auto N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_identity_126(N, N));
}
BENCHMARK(BM_SeriesIdentity)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
