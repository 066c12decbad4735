#include <benchmark/benchmark.h>

#include "tsfine/estimation.hpp"
#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace {

tsfine::ModelSpec ar2_model() {
    tsfine::ModelSpec model;
    model.phi = {0.25, 0.5};
    return model;
}

void BM_GaussianWhiteNoise(benchmark::State& state) {
    const tsfine::NoiseSpec spec{12345, static_cast<std::size_t>(state.range(0)), 1.0};
    for (auto _ : state) {
        auto series = tsfine::gaussian_white_noise(spec);
        benchmark::DoNotOptimize(series.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GaussianWhiteNoise)->Arg(500)->Arg(10000)->Arg(100000);

void BM_SimulateAr2(benchmark::State& state) {
    const auto model = ar2_model();
    const tsfine::NoiseSpec noise{7, static_cast<std::size_t>(state.range(0)), 1.0};
    for (auto _ : state) {
        auto series = tsfine::simulate_arima(model, noise, 1000);
        benchmark::DoNotOptimize(series.values.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateAr2)->Arg(500)->Arg(10000);

void BM_EmpiricalAcf(benchmark::State& state) {
    const auto model = ar2_model();
    const auto series = tsfine::simulate_arima(
        model, {7, static_cast<std::size_t>(state.range(0)), 1.0}, 1000);
    for (auto _ : state) {
        auto acf = tsfine::empirical_acf(series, 25);
        benchmark::DoNotOptimize(acf.values.data());
    }
}
BENCHMARK(BM_EmpiricalAcf)->Arg(500)->Arg(10000)->Arg(100000);

void BM_LevinsonDurbin(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    tsfine::ModelSpec model = ar2_model();
    model.sigma2 = 1.0;
    const auto profile = tsfine::theoretical_acf(model, order);
    for (auto _ : state) {
        auto ld = tsfine::levinson_durbin(profile, order);
        benchmark::DoNotOptimize(ld.pac.data());
    }
}
BENCHMARK(BM_LevinsonDurbin)->Arg(10)->Arg(25)->Arg(100);

void BM_CharacteristicRoots(benchmark::State& state) {
    // stationary by construction: reflection coefficients shrink toward zero
    const int p = static_cast<int>(state.range(0));
    std::vector<double> phi(p, 0.0);
    for (int i = 0; i < p; ++i) phi[i] = 0.4 / (i + 1.0);
    for (auto _ : state) {
        auto roots = tsfine::characteristic_roots(phi);
        benchmark::DoNotOptimize(roots.roots.data());
    }
}
BENCHMARK(BM_CharacteristicRoots)->Arg(2)->Arg(6)->Arg(12);

void BM_FitAr2(benchmark::State& state) {
    const auto model = ar2_model();
    const auto series = tsfine::simulate_arima(
        model, {11, static_cast<std::size_t>(state.range(0)), 1.0}, 1000);
    for (auto _ : state) {
        auto fit = tsfine::fit_ar(series, 2);
        benchmark::DoNotOptimize(fit.phi_hat.data());
    }
}
BENCHMARK(BM_FitAr2)->Arg(500)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
