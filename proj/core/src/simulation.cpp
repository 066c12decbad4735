#include "tsfine/simulation.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "innovation_kernel.hpp"
#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

void require_model_finite(const ModelSpec& model) {
    for (double c : model.phi) {
        if (!std::isfinite(c)) throw InputError("AR coefficient is not finite");
    }
    for (double c : model.theta) {
        if (!std::isfinite(c)) throw InputError("MA coefficient is not finite");
    }
    if (!std::isfinite(model.theta0)) throw InputError("theta0 is not finite");
    if (!std::isfinite(model.mu)) throw InputError("mu is not finite");
    if (model.d < 0) throw InputError("differencing order d must be >= 0");
}

// Innovation recovered from realized values, mirroring the forward recursion
// with zero padding before the sample start. For a pure AR model with zero
// drift this reduces bit-for-bit to detail::ar_innovation.
double recover_innovation(const std::vector<double>& z,
                          const std::vector<double>& recovered, std::size_t t,
                          const ModelSpec& model, double mean) {
    const std::size_t p = model.phi.size();
    const std::size_t q = model.theta.size();
    if (q == 0 && model.theta0 == 0.0 && t >= p) {
        return detail::ar_innovation(z, t, model.phi, mean);
    }
    double acc = model.theta0;
    for (std::size_t i = 0; i < p; ++i) {
        acc += model.phi[i] * (t >= i + 1 ? z[t - 1 - i] - mean : 0.0);
    }
    for (std::size_t j = 0; j < q; ++j) {
        acc -= model.theta[j] * (t >= j + 1 ? recovered[t - 1 - j] : 0.0);
    }
    return (z[t] - mean) - acc;
}

}  // namespace

TimeSeries gaussian_white_noise(const NoiseSpec& spec) {
    if (spec.n < 1) throw InputError("noise length n must be >= 1");
    if (!std::isfinite(spec.sigma) || spec.sigma < 0.0) {
        throw InputError("sigma must be finite and >= 0");
    }

    // mt19937_64 + Box-Muller. Both halves of each pair are consumed in
    // order, so the draw at index i depends only on (seed, i).
    std::mt19937_64 engine(spec.seed);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double scale = 0x1.0p-53;

    TimeSeries out;
    out.values.resize(spec.n);
    for (std::size_t i = 0; i < spec.n; i += 2) {
        const double u1 = (static_cast<double>(engine() >> 11) + 1.0) * scale;  // (0, 1]
        const double u2 = static_cast<double>(engine() >> 11) * scale;          // [0, 1)
        const double radius = std::sqrt(-2.0 * std::log(u1));
        out.values[i] = spec.sigma * (radius * std::cos(two_pi * u2));
        if (i + 1 < spec.n) {
            out.values[i + 1] = spec.sigma * (radius * std::sin(two_pi * u2));
        }
    }
    return out;
}

TimeSeries simulate_arima(const ModelSpec& model, const NoiseSpec& noise,
                          std::size_t burn_in) {
    require_model_finite(model);
    if (noise.n < 1) throw InputError("sample length n must be >= 1");
    if (model.p() > 0 && !is_stationary(model.phi)) {
        throw ModelDomainError("AR part is not stationary");
    }

    const std::size_t n = noise.n;
    const std::size_t total = burn_in + n;
    const std::size_t p = model.phi.size();
    const std::size_t q = model.theta.size();

    NoiseSpec full = noise;
    full.n = total;
    const std::vector<double> a = gaussian_white_noise(full).values;

    // ARMA recursion with zero pre-sample state.
    std::vector<double> w(total);
    for (std::size_t t = 0; t < total; ++t) {
        double acc = model.theta0;
        for (std::size_t i = 0; i < p; ++i) {
            acc += model.phi[i] * (t >= i + 1 ? w[t - 1 - i] : 0.0);
        }
        for (std::size_t j = 0; j < q; ++j) {
            acc -= model.theta[j] * (t >= j + 1 ? a[t - 1 - j] : 0.0);
        }
        w[t] = acc + a[t];
        if (!std::isfinite(w[t])) {
            throw NumericError("non-finite value in ARMA recursion at index " +
                               std::to_string(t));
        }
    }

    TimeSeries out;
    std::vector<double> aligned(n);

    if (model.d == 0) {
        // Keep the burn-in history around: recovery at the first retained
        // indices reaches back into it, exactly like the forward pass did.
        std::vector<double> zfull(total);
        for (std::size_t t = 0; t < total; ++t) zfull[t] = w[t] + model.mu;

        std::vector<double> recovered(total);
        for (std::size_t t = 0; t < total; ++t) {
            recovered[t] = recover_innovation(zfull, recovered, t, model, model.mu);
        }

        out.values.assign(zfull.begin() + burn_in, zfull.end());
        aligned.assign(recovered.begin() + burn_in, recovered.end());
    } else {
        // Integrate after discarding the burn-in, zero integration constants.
        std::vector<double> y(w.begin() + burn_in, w.end());
        for (int rep = 0; rep < model.d; ++rep) {
            for (std::size_t t = 1; t < n; ++t) y[t] = y[t] + y[t - 1];
        }
        out.values.resize(n);
        for (std::size_t t = 0; t < n; ++t) out.values[t] = y[t] + model.mu;

        // Invert the output pipeline: remove mu, difference d times (the
        // leading value keeps the zero initial condition), then recover the
        // innovations. Pre-window history is gone after integration, so the
        // recursion zero-pads, matching the forward initialization.
        std::vector<double> u(n);
        for (std::size_t t = 0; t < n; ++t) u[t] = out.values[t] - model.mu;
        for (int rep = 0; rep < model.d; ++rep) {
            for (std::size_t t = n; t-- > 1;) u[t] = u[t] - u[t - 1];
        }
        std::vector<double> recovered(n);
        for (std::size_t t = 0; t < n; ++t) {
            recovered[t] = recover_innovation(u, recovered, t, model, 0.0);
        }
        aligned = std::move(recovered);
    }

    out.aligned_noise = std::move(aligned);
    return out;
}

TimeSeries difference(const TimeSeries& series, int d) {
    if (d < 0) throw InputError("differencing order d must be >= 0");
    const std::size_t n = series.values.size();
    if (n == 0) throw InputError("series must be nonempty");
    if (n <= static_cast<std::size_t>(d)) {
        throw InputError("series too short to difference " + std::to_string(d) +
                         " times");
    }
    if (d == 0) return series;

    std::vector<double> v = series.values;
    std::size_t len = n;
    for (int rep = 0; rep < d; ++rep) {
        for (std::size_t t = 0; t + 1 < len; ++t) v[t] = v[t + 1] - v[t];
        --len;
    }
    v.resize(len);

    TimeSeries out;
    out.values = std::move(v);
    return out;
}

TimeSeries integrate(const TimeSeries& series, int d) {
    if (d < 0) throw InputError("integration order d must be >= 0");
    if (series.values.empty()) throw InputError("series must be nonempty");
    if (d == 0) return series;

    std::vector<double> v = series.values;
    for (int rep = 0; rep < d; ++rep) {
        for (std::size_t t = 1; t < v.size(); ++t) v[t] = v[t] + v[t - 1];
    }
    TimeSeries out;
    out.values = std::move(v);
    return out;
}

}  // namespace tsfine
