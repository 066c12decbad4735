#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tsfine/diagnostics.hpp"
#include "tsfine/errors.hpp"
#include "tsfine/estimation.hpp"
#include "tsfine/simulation.hpp"

using namespace tsfine;

namespace {

TimeSeries from(std::vector<double> values) {
    TimeSeries out;
    out.values = std::move(values);
    return out;
}

// (u, Phi^-1(u)) reference pairs from standard normal tables
struct QuantileCase {
    double u;
    double x;
};
constexpr QuantileCase kQuantiles[] = {
    {1e-10, -6.3613409024040557},
    {1e-08, -5.6120012441747891},
    {1e-06, -4.7534243088228987},
    {0.0013498980316301035, -2.9999999999999982},
    {0.025, -1.9599639845400545},
    {0.05, -1.6448536269514729},
    {0.1, -1.2815515655446004},
    {0.15865525393145707, -1.0},
    {0.3, -0.52440051270804089},
    {0.5, 0.0},
    {0.7, 0.52440051270804067},
    {0.8413447460685429, 1.0},
    {0.9, 1.2815515655446004},
    {0.95, 1.6448536269514722},
    {0.975, 1.959963984540054},
    {0.9986501019683699, 2.9999999999999982},
    {0.999999, 4.7534243088170873},
    {0.99999999, 5.6120012433055049},
    {0.9999999999, 6.3613408896974217},
};

}  // namespace

TEST_CASE("histogram: direct binning of a small sample") {
    const auto plot = histogram(from({0, 1, 2, 3}), 2);
    REQUIRE(plot.bins.size() == 2);
    CHECK(plot.bins[0].left == 0.0);
    CHECK(plot.bins[0].right == 1.5);
    CHECK(plot.bins[1].left == 1.5);
    CHECK(plot.bins[1].right == 3.0);
    CHECK(plot.bins[0].count == 2);
    CHECK(plot.bins[1].count == 2);
}

TEST_CASE("histogram: constant series lands in a single bin") {
    const auto plot = histogram(from(std::vector<double>(12, 4.0)));
    REQUIRE(plot.bins.size() == 1);
    CHECK(plot.bins[0].count == 12);
    CHECK(plot.bins[0].left < plot.bins[0].right);
}

TEST_CASE("histogram: Sturges default bin count") {
    const auto noise = gaussian_white_noise({3, 500, 1.0});
    const auto plot = histogram(noise);
    // ceil(log2(500)) + 1 = 10
    CHECK(plot.bins.size() == 10);
}

TEST_CASE("histogram: mass conservation on random inputs") {
    std::mt19937_64 rng(14);
    std::normal_distribution<double> gauss(0.0, 3.0);
    for (int rep = 0; rep < 25; ++rep) {
        const std::size_t n = 2 + rng() % 400;
        std::vector<double> values(n);
        for (auto& v : values) v = gauss(rng);
        const auto plot = histogram(from(std::move(values)));
        std::size_t total = 0;
        for (const auto& bin : plot.bins) total += bin.count;
        CHECK(total == n);
        for (std::size_t i = 1; i < plot.bins.size(); ++i) {
            CHECK(plot.bins[i - 1].right == doctest::Approx(plot.bins[i].left));
            CHECK(plot.bins[i - 1].left < plot.bins[i - 1].right);
        }
    }
}

TEST_CASE("histogram: rightmost bin is closed (max lands inside)") {
    const auto plot = histogram(from({0.0, 0.25, 0.5, 0.75, 1.0}), 4);
    CHECK(plot.bins.back().count == 2);  // 0.75 and 1.0
}

TEST_CASE("inverse normal cdf: reference table") {
    for (const auto& c : kQuantiles) {
        CHECK(inverse_normal_cdf(c.u) == doctest::Approx(c.x).epsilon(5e-10));
        CHECK(std::abs(inverse_normal_cdf(c.u) - c.x) <= 1e-6);  // contract bound
    }
    CHECK(inverse_normal_cdf(0.5) == 0.0);
    // truncated-table probabilities from the usual printed tables
    CHECK(std::abs(inverse_normal_cdf(0.8413447) - 1.0) <= 1e-5);
    CHECK(std::abs(inverse_normal_cdf(0.975) - 1.959964) <= 1e-6);
}

TEST_CASE("inverse normal cdf: odd symmetry over a dyadic grid") {
    // dyadic u keeps 1 - u exactly representable, isolating method symmetry
    const int denom = 1 << 14;
    for (int i = 1; i < denom; ++i) {
        const double u = static_cast<double>(i) / denom;
        const double lo = inverse_normal_cdf(u);
        const double hi = inverse_normal_cdf(1.0 - u);
        CHECK(std::abs(lo + hi) <= 1e-12);
    }
}

TEST_CASE("inverse normal cdf: round trips through the normal cdf") {
    for (double u = 0.0005; u < 1.0; u += 0.0101) {
        const double x = inverse_normal_cdf(u);
        CHECK(oracle::normal_cdf(x) == doctest::Approx(u).epsilon(1e-12));
    }
}

TEST_CASE("inverse normal cdf: domain errors") {
    CHECK_THROWS_AS(inverse_normal_cdf(0.0), ModelDomainError);
    CHECK_THROWS_AS(inverse_normal_cdf(1.0), ModelDomainError);
    CHECK_THROWS_AS(inverse_normal_cdf(-0.1), ModelDomainError);
    CHECK_THROWS_AS(inverse_normal_cdf(std::nan("")), ModelDomainError);
}

TEST_CASE("normal scores: perfect quantile data has correlation one") {
    const std::size_t n = 101;
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = (static_cast<double>(i + 1) - 0.375) /
                           (static_cast<double>(n) + 0.25);
        values[i] = inverse_normal_cdf(pos);
    }
    const auto plot = normal_scores(from(std::move(values)));
    CHECK(plot.correlation == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normal scores: median plotting position maps to zero") {
    const auto plot = normal_scores(from({5.0, 1.0, 3.0, 2.0, 4.0}));  // odd n
    CHECK(std::abs(plot.points[2].first) <= 1e-10);
    CHECK(plot.points[2].second == 3.0);
}

TEST_CASE("normal scores: both coordinates are nondecreasing") {
    const auto noise = gaussian_white_noise({8, 300, 1.0});
    const auto plot = normal_scores(noise);
    for (std::size_t i = 1; i < plot.points.size(); ++i) {
        CHECK(plot.points[i].first >= plot.points[i - 1].first);
        CHECK(plot.points[i].second >= plot.points[i - 1].second);
    }
}

TEST_CASE("normal scores: white noise correlation is high") {
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const auto noise = gaussian_white_noise({s, 500, 1.0});
        CHECK(normal_scores(noise).correlation >= 0.99);
    }
}

TEST_CASE("normal scores: validation") {
    CHECK_THROWS_AS(normal_scores(from({1.0, 2.0})), InputError);
}

TEST_CASE("lagged scatter: hand-checked pairs") {
    const auto plot = lagged_scatter(from({1, 2, 3}), 1);
    REQUIRE(plot.points.size() == 2);
    CHECK(plot.points[0] == std::pair<double, double>{1.0, 2.0});
    CHECK(plot.points[1] == std::pair<double, double>{2.0, 3.0});

    const auto last = lagged_scatter(from({1, 2, 3}), 2);
    REQUIRE(last.points.size() == 1);
    CHECK(last.points[0] == std::pair<double, double>{1.0, 3.0});

    CHECK_THROWS_AS(lagged_scatter(from({1, 2, 3}), 3), InputError);
    CHECK_THROWS_AS(lagged_scatter(from({1, 2, 3}), 0), InputError);
}

TEST_CASE("lagged scatter: pair correlation tracks the sample ACF") {
    ModelSpec model;
    model.phi = {0.25, 0.5};
    const auto series = simulate_arima(model, {1618, 100000, 1.0}, 1000);
    const auto acf = empirical_acf(series, 3);
    for (int k = 1; k <= 3; ++k) {
        const auto plot = lagged_scatter(series, k);
        std::vector<double> x, y;
        x.reserve(plot.points.size());
        y.reserve(plot.points.size());
        for (const auto& [a, b] : plot.points) {
            x.push_back(a);
            y.push_back(b);
        }
        CHECK(std::abs(oracle::pearson(x, y) - acf.values[k]) <= 0.02);
    }
}

TEST_CASE("time plot: indexes from one") {
    const auto plot = time_plot(from({5.0}));
    REQUIRE(plot.points.size() == 1);
    CHECK(plot.points[0] == std::pair<double, double>{1.0, 5.0});

    const auto noise = gaussian_white_noise({4, 50, 1.0});
    const auto longer = time_plot(noise);
    for (std::size_t i = 1; i < longer.points.size(); ++i) {
        CHECK(longer.points[i].first > longer.points[i - 1].first);
        CHECK(longer.points[i].second == noise.values[i]);
    }
}

TEST_CASE("stem plot conversions carry lags and band") {
    ModelSpec model;
    model.phi = {0.5};
    const auto profile = theoretical_acf(model, 5);
    const auto stems = acf_stem(profile, 0.1);
    REQUIRE(stems.points.size() == 6);
    CHECK(stems.points[0].first == 0.0);
    CHECK(stems.points[0].second == 1.0);
    CHECK(stems.band == 0.1);

    PacProfile pac;
    pac.values = {0.5, 0.0};
    pac.band = 0.09;
    const auto pstems = pac_stem(pac);
    REQUIRE(pstems.points.size() == 2);
    CHECK(pstems.points[0].first == 1.0);
    CHECK(pstems.band == 0.09);
}
