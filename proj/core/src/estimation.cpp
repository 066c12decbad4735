#include "tsfine/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "innovation_kernel.hpp"
#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

void require_series(const TimeSeries& series, std::size_t min_n,
                    const char* context) {
    if (series.values.size() < min_n) {
        throw InputError(std::string(context) + ": series must have at least " +
                         std::to_string(min_n) + " observations");
    }
    for (double v : series.values) {
        if (!std::isfinite(v)) {
            throw InputError(std::string(context) + ": series values must be finite");
        }
    }
}

double sample_mean(const std::vector<double>& z) {
    double s = 0.0;
    for (double v : z) s += v;
    return s / static_cast<double>(z.size());
}

}  // namespace

SummaryStats summary_stats(const TimeSeries& series) {
    require_series(series, 2, "summary_stats");
    const auto& z = series.values;

    SummaryStats out;
    out.n = z.size();
    out.mean = sample_mean(z);
    double ss = 0.0;
    for (double v : z) {
        const double d = v - out.mean;
        ss += d * d;
    }
    out.variance = ss / static_cast<double>(z.size());
    const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
    out.min = *lo;
    out.max = *hi;
    return out;
}

LagProfile empirical_acf(const TimeSeries& series, int max_lag) {
    require_series(series, 2, "empirical_acf");
    const auto& z = series.values;
    const std::size_t n = z.size();
    if (max_lag < 0 || static_cast<std::size_t>(max_lag) > n - 1) {
        throw InputError("max_lag must lie in [0, n-1]");
    }

    const double mean = sample_mean(z);
    double denom = 0.0;
    for (double v : z) {
        const double d = v - mean;
        denom += d * d;
    }
    if (denom == 0.0) {
        throw DegenerateSeriesError("constant series: no correlation structure to estimate");
    }

    LagProfile out;
    out.values.resize(max_lag + 1);
    out.values[0] = 1.0;
    for (int k = 1; k <= max_lag; ++k) {
        double num = 0.0;
        for (std::size_t t = 0; t + k < n; ++t) {
            num += (z[t] - mean) * (z[t + k] - mean);
        }
        out.values[k] = num / denom;
    }
    out.gamma0 = denom / static_cast<double>(n);
    out.kind = ProfileKind::Empirical;
    out.n = n;
    out.reliable_max_lag = n / 4;
    return out;
}

LevinsonResult levinson_durbin(const LagProfile& profile, int max_k) {
    if (max_k < 1) throw InputError("max_k must be >= 1");
    if (static_cast<int>(profile.values.size()) < max_k + 1) {
        throw InputError("profile must cover lags 0..max_k");
    }
    if (profile.values[0] != 1.0) {
        throw InputError("profile must equal 1 at lag 0");
    }

    const auto& r = profile.values;
    const double scale = profile.gamma0 > 0.0 ? profile.gamma0 : 1.0;

    LevinsonResult out;
    out.coeffs.reserve(max_k);
    out.pac.reserve(max_k);
    out.sigma2.reserve(max_k + 1);
    out.sigma2.push_back(scale);

    std::vector<double> prev;
    double v = 1.0;  // prediction variance in units of gamma0
    for (int k = 1; k <= max_k; ++k) {
        if (!(v > 0.0)) {
            throw IllConditionedError(
                "non-positive prediction variance at order " + std::to_string(k),
                k);
        }
        double num = r[k];
        for (int j = 1; j < k; ++j) num -= prev[j - 1] * r[k - j];
        const double kappa = num / v;

        std::vector<double> cur(k);
        for (int j = 1; j < k; ++j) cur[j - 1] = prev[j - 1] - kappa * prev[k - j - 1];
        cur[k - 1] = kappa;

        v *= (1.0 - kappa * kappa);
        out.pac.push_back(kappa);
        out.sigma2.push_back(scale * v);
        out.coeffs.push_back(cur);
        prev = std::move(cur);
    }
    return out;
}

PacProfile empirical_pac(const TimeSeries& series, int max_k, double z_plot) {
    if (max_k < 1) throw InputError("max_k must be >= 1");
    const std::size_t n = series.values.size();
    if (n <= static_cast<std::size_t>(max_k)) {
        throw InputError("series length must exceed max_k");
    }

    const LagProfile acf = empirical_acf(series, max_k);
    LevinsonResult ld = levinson_durbin(acf, max_k);

    PacProfile out;
    out.values = std::move(ld.pac);
    out.band = z_plot / std::sqrt(static_cast<double>(n));
    out.kind = ProfileKind::Empirical;
    return out;
}

FitResult fit_ar(const TimeSeries& series, int p) {
    if (p < 0) throw InputError("order p must be >= 0");
    require_series(series, 2, "fit_ar");
    const std::size_t n = series.values.size();
    if (n <= 4 * static_cast<std::size_t>(p)) {
        throw InputError("fit_ar needs n > 4p observations");
    }

    FitResult out;
    out.p = p;

    const LagProfile acf = empirical_acf(series, std::max(p, 0));
    out.sample_mean = sample_mean(series.values);
    out.gamma0_hat = acf.gamma0;

    if (p == 0) {
        out.sigma2_hat = out.gamma0_hat;
        out.residuals = residuals(series, {}, out.sample_mean);
        return out;
    }

    const LevinsonResult ld = levinson_durbin(acf, p);
    out.phi_hat = ld.coeffs[p - 1];

    double reduction = 1.0;
    for (int i = 1; i <= p; ++i) reduction -= out.phi_hat[i - 1] * acf.values[i];
    out.sigma2_hat = out.gamma0_hat * reduction;
    if (out.sigma2_hat < 0.0) out.sigma2_hat = 0.0;  // guard roundoff at exact fits

    out.residuals = residuals(series, out.phi_hat, out.sample_mean);
    return out;
}

TimeSeries residuals(const TimeSeries& series, const std::vector<double>& phi,
                     double mean) {
    require_series(series, 1, "residuals");
    if (!std::isfinite(mean)) throw InputError("mean must be finite");
    for (double c : phi) {
        if (!std::isfinite(c)) throw InputError("AR coefficient is not finite");
    }
    const std::size_t n = series.values.size();
    const std::size_t p = phi.size();
    if (n <= p) throw InputError("series too short for the model order");

    TimeSeries out;
    out.values.resize(n - p);
    for (std::size_t t = p; t < n; ++t) {
        out.values[t - p] = detail::ar_innovation(series.values, t, phi, mean);
    }
    return out;
}

}  // namespace tsfine
