// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "dill/kernels.hpp"

using namespace dill;

namespace {

Word random_word(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Word w(n);
    for (auto& c : w)
        c = static_cast<Letter>(rng() & 1);
    return w;
}

template <bool Parallel>
void window_profile(benchmark::State& state, Base base)
{
    const auto window = static_cast<std::size_t>(state.range(0));
    const std::size_t max_offset = 4 * window;
    const Word x = random_word(max_offset + window, 1);
    const Word y = random_word(max_offset + window, 2);
    for (auto _ : state) {
        auto profile = Parallel ? kernels::window_profile(base, x, y, window, max_offset)
                                : kernels::window_profile_serial(base, x, y, window, max_offset);
        benchmark::DoNotOptimize(profile.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * (max_offset + 1)));
}

void profile_h_serial(benchmark::State& s) { window_profile<false>(s, Base::Hamming); }
void profile_h_parallel(benchmark::State& s) { window_profile<true>(s, Base::Hamming); }
void profile_l_serial(benchmark::State& s) { window_profile<false>(s, Base::Levenshtein); }
void profile_l_parallel(benchmark::State& s) { window_profile<true>(s, Base::Levenshtein); }

template <bool Parallel>
void lemma_scan(benchmark::State& state)
{
    const RuleTable f = rules::diamond_example();
    const auto length = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto scan = Parallel ? kernels::lev_lemma_scan(f, length) : kernels::lev_lemma_scan_serial(f, length);
        benchmark::DoNotOptimize(scan.pairs);
    }
}

void lemma_serial(benchmark::State& s) { lemma_scan<false>(s); }
void lemma_parallel(benchmark::State& s) { lemma_scan<true>(s); }

} // namespace

BENCHMARK(profile_h_serial)->RangeMultiplier(4)->Range(16, 1024)->UseRealTime();
BENCHMARK(profile_h_parallel)->RangeMultiplier(4)->Range(16, 1024)->UseRealTime();
BENCHMARK(profile_l_serial)->RangeMultiplier(2)->Range(16, 128)->UseRealTime();
BENCHMARK(profile_l_parallel)->RangeMultiplier(2)->Range(16, 128)->UseRealTime();
BENCHMARK(lemma_serial)->DenseRange(5, 7)->UseRealTime();
BENCHMARK(lemma_parallel)->DenseRange(5, 7)->UseRealTime();

BENCHMARK_MAIN();
