#include <benchmark/benchmark.h>

#include "lzlab/fslz.hpp"
#include "lzlab/sources.hpp"
#include "lzlab/swlz.hpp"
#include "lzlab/word_index.hpp"

namespace {

using namespace lzlab;

const SymbolSequence& golden(std::size_t n) {
    static std::size_t cached_n = 0;
    static SymbolSequence cached;
    if (cached_n != n) {
        sources::RotationConfig cfg;
        cfg.theta_fp = sources::golden_theta();
        cached = sources::generate_rotation(cfg, n);
        cached_n = n;
    }
    return cached;
}

const SymbolSequence& iid(std::size_t n) {
    static std::size_t cached_n = 0;
    static SymbolSequence cached;
    if (cached_n != n) {
        const double p[] = {0.5, 0.5};
        cached = sources::generate_iid(p, 1, n);
        cached_n = n;
    }
    return cached;
}

void BM_SwlzEncodeRotation(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = golden(64 * n_w);
    for (auto _ : state) benchmark::DoNotOptimize(swlz::swlz_encode(x, {n_w, x.alphabet}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_SwlzEncodeRotation)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_SwlzEncodeIid(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = iid(64 * n_w);
    for (auto _ : state) benchmark::DoNotOptimize(swlz::swlz_encode(x, {n_w, x.alphabet}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_SwlzEncodeIid)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_SwlzDecode(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = golden(64 * n_w);
    const auto frame = swlz::swlz_encode(x, {n_w, x.alphabet}).frame;
    for (auto _ : state) benchmark::DoNotOptimize(swlz::swlz_decode(frame));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_SwlzDecode)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

void BM_FslzEncode(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = golden(64 * n_w);
    const std::size_t l_o = fslz::choose_match_length(recurrence::ReturnLaw::log(1.0), n_w);
    for (auto _ : state) benchmark::DoNotOptimize(fslz::fslz_encode(x, {n_w, l_o, x.alphabet}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_FslzEncode)->RangeMultiplier(4)->Range(256, 16384)->Unit(benchmark::kMillisecond);

// Indexed vs naive longest match at the same query points.
void BM_LongestMatchNaive(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = iid(8 * n_w);
    std::size_t t = n_w;
    for (auto _ : state) {
        benchmark::DoNotOptimize(swlz::longest_match_naive(x.view(), t, n_w, 256));
        t = t + 97 < x.size() - 256 ? t + 97 : n_w;
    }
}
BENCHMARK(BM_LongestMatchNaive)->RangeMultiplier(4)->Range(256, 16384);

void BM_LongestMatchIndexed(benchmark::State& state) {
    const auto n_w = static_cast<std::size_t>(state.range(0));
    const auto& x = iid(8 * n_w);
    const swlz::MatchFinder finder(x.view(), n_w, 2);
    std::size_t t = n_w;
    for (auto _ : state) {
        benchmark::DoNotOptimize(finder.find(t, 256));
        t = t + 97 < x.size() - 256 ? t + 97 : n_w;
    }
}
BENCHMARK(BM_LongestMatchIndexed)->RangeMultiplier(4)->Range(256, 16384);

void BM_WordIndex(benchmark::State& state) {
    const auto len = static_cast<std::size_t>(state.range(0));
    const auto& x = golden(std::size_t{1} << 20);
    for (auto _ : state) benchmark::DoNotOptimize(WordIndex(x.view(), len).distinct());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_WordIndex)->RangeMultiplier(8)->Range(8, 4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
