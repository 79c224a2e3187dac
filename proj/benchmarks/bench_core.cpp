#include <benchmark/benchmark.h>

#include "varreg/dieudonne.hpp"
#include "varreg/oracle.hpp"

using namespace varreg;

namespace {

TruncatedSeries make_series(SplitMix64& rng, Complex center, std::size_t order) {
    std::vector<Complex> c;
    for (std::size_t k = 0; k <= order; ++k)
        c.push_back(rng.disk(1.0));
    c[0] += Complex{2.0, 0.0};
    return TruncatedSeries(center, std::move(c));
}

HyperbolicData make_data(SplitMix64& rng, std::size_t n) {
    std::vector<Complex> gammas;
    for (std::size_t k = 0; k < n; ++k)
        gammas.push_back(rng.disk(0.7));
    return HyperbolicData(rng.disk(0.6), std::move(gammas));
}

void BM_SeriesMul(benchmark::State& state) {
    SplitMix64 rng(1);
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    const auto a = make_series(rng, Complex{0.0, 0.0}, order);
    const auto b = make_series(rng, Complex{0.0, 0.0}, order);
    for (auto _ : state) {
        auto c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesDiv(benchmark::State& state) {
    SplitMix64 rng(2);
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    const auto a = make_series(rng, Complex{0.0, 0.0}, order);
    const auto b = make_series(rng, Complex{0.0, 0.0}, order);
    for (auto _ : state) {
        auto c = series_div(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesDiv)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_SeriesCompose(benchmark::State& state) {
    SplitMix64 rng(3);
    const std::size_t order = static_cast<std::size_t>(state.range(0));
    const auto outer = make_series(rng, Complex{0.0, 0.0}, order);
    auto inner = make_series(rng, Complex{0.0, 0.0}, order);
    {
        std::vector<Complex> c(inner.coeffs());
        c[0] = Complex{0.0, 0.0};
        inner = TruncatedSeries(Complex{0.0, 0.0}, std::move(c));
    }
    for (auto _ : state) {
        auto c = series_compose(outer, inner);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesCompose)->Arg(4)->Arg(8)->Arg(16);

void BM_DiskNth(benchmark::State& state) {
    SplitMix64 rng(4);
    const auto data = make_data(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto disk = disk_nth(data);
        benchmark::DoNotOptimize(disk);
    }
}
BENCHMARK(BM_DiskNth)->Arg(1)->Arg(3)->Arg(5)->Arg(8);

void BM_ExtremalSeries(benchmark::State& state) {
    SplitMix64 rng(5);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const auto data = make_data(rng, n);
    const ExtremalSpec spec{data, ExtremalTail{Complex{0.4, 0.2}}};
    for (auto _ : state) {
        auto f = extremal_series(spec, n + 2);
        benchmark::DoNotOptimize(f);
    }
}
BENCHMARK(BM_ExtremalSeries)->Arg(1)->Arg(3)->Arg(5)->Arg(8);

void BM_HyperbolicDerivatives(benchmark::State& state) {
    SplitMix64 rng(6);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::vector<Complex> zeros;
    for (std::size_t k = 0; k <= n; ++k)
        zeros.push_back(rng.disk(0.8));
    const BlaschkeProduct b(0.3, zeros);
    const auto f = blaschke_series(b, Complex{0.2, 0.1}, n + 2);
    for (auto _ : state) {
        auto params = hyperbolic_derivatives(f, n);
        benchmark::DoNotOptimize(params);
    }
}
BENCHMARK(BM_HyperbolicDerivatives)->Arg(2)->Arg(4)->Arg(6);

void BM_ContainmentTrial(benchmark::State& state) {
    SplitMix64 rng(7);
    const auto data = make_data(rng, 3);
    std::uint64_t t = 0;
    for (auto _ : state) {
        SplitMix64 trial_rng(t++);
        const ExtremalTail tail = random_schur_tail(trial_rng, 0.8);
        const auto f = extremal_series(ExtremalSpec{data, tail}, 5);
        benchmark::DoNotOptimize(derivative_at_center(f, 3));
    }
}
BENCHMARK(BM_ContainmentTrial);

} // namespace

BENCHMARK_MAIN();
