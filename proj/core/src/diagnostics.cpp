#include "tsfine/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

void require_finite_values(const TimeSeries& series, const char* context) {
    for (double v : series.values) {
        if (!std::isfinite(v)) {
            throw InputError(std::string(context) + ": series values must be finite");
        }
    }
}

double pearson(const std::vector<std::pair<double, double>>& pts) {
    const std::size_t n = pts.size();
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    const double denom = std::sqrt(sxx) * std::sqrt(syy);
    return denom > 0.0 ? sxy / denom : 0.0;
}

}  // namespace

std::string to_string(PlotKind kind) {
    switch (kind) {
        case PlotKind::Histogram: return "histogram";
        case PlotKind::NormalScores: return "normal_scores";
        case PlotKind::TimePlot: return "time_plot";
        case PlotKind::LaggedScatter: return "lagged_scatter";
        case PlotKind::AcfStem: return "acf_stem";
        case PlotKind::PacStem: return "pac_stem";
    }
    return "time_plot";
}

PlotData histogram(const TimeSeries& series, int bin_count) {
    const std::size_t n = series.values.size();
    if (n < 2) throw InputError("histogram needs at least 2 observations");
    require_finite_values(series, "histogram");
    if (bin_count < 0) throw InputError("bin count must be >= 0");

    PlotData out;
    out.kind = PlotKind::Histogram;
    out.n = n;
    out.title = "Histogram";

    const auto [lo_it, hi_it] =
        std::minmax_element(series.values.begin(), series.values.end());
    const double lo = *lo_it, hi = *hi_it;

    if (lo == hi) {
        out.bins.push_back({lo - 0.5, lo + 0.5, n});
        return out;
    }

    const int nb = bin_count > 0
                       ? bin_count
                       : static_cast<int>(std::ceil(std::log2(static_cast<double>(n)))) + 1;
    const double width = (hi - lo) / nb;
    out.bins.resize(nb);
    for (int i = 0; i < nb; ++i) {
        out.bins[i].left = lo + i * width;
        out.bins[i].right = (i == nb - 1) ? hi : lo + (i + 1) * width;
        out.bins[i].count = 0;
    }
    for (double v : series.values) {
        int idx = static_cast<int>((v - lo) / width);
        idx = std::clamp(idx, 0, nb - 1);  // rightmost bin closed on both ends
        ++out.bins[idx].count;
    }
    return out;
}

PlotData normal_scores(const TimeSeries& series) {
    const std::size_t n = series.values.size();
    if (n < 3) throw InputError("normal_scores needs at least 3 observations");
    require_finite_values(series, "normal_scores");

    std::vector<double> sorted = series.values;
    std::sort(sorted.begin(), sorted.end());

    PlotData out;
    out.kind = PlotKind::NormalScores;
    out.n = n;
    out.title = "Normal Scores Plot";
    out.points.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = (static_cast<double>(i + 1) - 0.375) /
                           (static_cast<double>(n) + 0.25);
        out.points[i] = {inverse_normal_cdf(pos), sorted[i]};
    }
    out.correlation = pearson(out.points);
    return out;
}

double inverse_normal_cdf(double u) {
    if (!(u > 0.0) || !(u < 1.0)) {
        throw ModelDomainError("probability must lie strictly inside (0, 1)");
    }

    // Acklam's rational approximation, then one Newton step against the exact
    // normal CDF (erfc) to reach near machine precision.
    static constexpr double a[6] = {
        -3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
        1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {
        -5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
        6.680131188771972e+01, -1.328068155288572e+01};
    static constexpr double c[6] = {
        -7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
        -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr double d[4] = {
        7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
        3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    constexpr double p_high = 1.0 - p_low;

    double x;
    if (u < p_low) {
        const double q = std::sqrt(-2.0 * std::log(u));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (u <= p_high) {
        const double q = u - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        // 1 - u is exact for u >= 0.5, so the tails stay symmetric.
        const double q = std::sqrt(-2.0 * std::log(1.0 - u));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    constexpr double inv_sqrt_2pi = 0.3989422804014326779;
    const double err = 0.5 * std::erfc(-x / std::numbers::sqrt2) - u;
    const double pdf = inv_sqrt_2pi * std::exp(-0.5 * x * x);
    if (pdf > 0.0) x -= err / pdf;
    return x;
}

PlotData lagged_scatter(const TimeSeries& series, int k) {
    const std::size_t n = series.values.size();
    if (n == 0) throw InputError("series must be nonempty");
    require_finite_values(series, "lagged_scatter");
    if (k < 1 || static_cast<std::size_t>(k) >= n) {
        throw InputError("lag k must lie in [1, n-1]");
    }

    PlotData out;
    out.kind = PlotKind::LaggedScatter;
    out.n = n;
    out.title = "Lagged Scatter (k = " + std::to_string(k) + ")";
    out.points.resize(n - k);
    for (std::size_t t = 0; t + k < n; ++t) {
        out.points[t] = {series.values[t], series.values[t + k]};
    }
    return out;
}

PlotData time_plot(const TimeSeries& series) {
    const std::size_t n = series.values.size();
    if (n == 0) throw InputError("series must be nonempty");
    require_finite_values(series, "time_plot");

    PlotData out;
    out.kind = PlotKind::TimePlot;
    out.n = n;
    out.title = "Time Plot";
    out.points.resize(n);
    for (std::size_t t = 0; t < n; ++t) {
        out.points[t] = {static_cast<double>(t + 1), series.values[t]};
    }
    return out;
}

PlotData acf_stem(const LagProfile& profile, double band) {
    PlotData out;
    out.kind = PlotKind::AcfStem;
    out.n = profile.n;
    out.band = band;
    out.title = "ACF";
    out.points.reserve(profile.values.size());
    for (std::size_t k = 0; k < profile.values.size(); ++k) {
        out.points.emplace_back(static_cast<double>(k), profile.values[k]);
    }
    return out;
}

PlotData pac_stem(const PacProfile& profile) {
    PlotData out;
    out.kind = PlotKind::PacStem;
    out.band = profile.band;
    out.title = "PAC";
    out.points.reserve(profile.values.size());
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        out.points.emplace_back(static_cast<double>(i + 1), profile.values[i]);
    }
    return out;
}

}  // namespace tsfine
