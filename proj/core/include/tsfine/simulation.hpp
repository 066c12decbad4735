#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tsfine/process_model.hpp"

namespace tsfine {

/// An ordered sample z_1..z_n, optionally paired with the innovations that
/// drove it (aligned index for index with `values`).
struct TimeSeries {
    std::vector<double> values;
    std::optional<std::vector<double>> aligned_noise;

    std::size_t n() const { return values.size(); }
};

/// Parameters of a seeded Gaussian white-noise draw.
struct NoiseSpec {
    std::uint64_t seed = 0;
    std::size_t n = 1;
    double sigma = 1.0;  ///< standard deviation, >= 0
};

/// n values from Normal(0, sigma^2). The generator is mt19937_64 fed through
/// the Box-Muller transform, so output is a pure function of (seed, n, sigma)
/// and bit-identical across runs of the same build.
TimeSeries gaussian_white_noise(const NoiseSpec& spec);

/// Seeded ARIMA(p, d, q) sample path. Generates burn_in + n innovations, runs
/// the ARMA recursion with zero pre-sample initialization, drops the first
/// burn_in values, integrates d times (zero integration constants), and adds
/// mu. `aligned_noise` holds the innovations recovered from the returned
/// values under the fixed evaluation order shared with residuals(), so the
/// innovation identity holds bit-for-bit.
TimeSeries simulate_arima(const ModelSpec& model, const NoiseSpec& noise,
                          std::size_t burn_in = 1000);

/// Applies the first-difference operator d times; output length n - d.
TimeSeries difference(const TimeSeries& series, int d);

/// Cumulative summation applied d times with zero initial conditions.
TimeSeries integrate(const TimeSeries& series, int d);

}  // namespace tsfine
