#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace tsfine {

enum class PlotKind {
    Histogram,
    NormalScores,
    TimePlot,
    LaggedScatter,
    AcfStem,
    PacStem,
};

std::string to_string(PlotKind kind);

struct HistogramBin {
    double left = 0.0;
    double right = 0.0;
    std::size_t count = 0;
};

/// Plot-ready data: (x, y) points for scatter/line/stem kinds, bins for
/// histograms, plus the metadata the renderers need.
struct PlotData {
    PlotKind kind = PlotKind::TimePlot;
    std::vector<std::pair<double, double>> points;
    std::vector<HistogramBin> bins;
    double band = 0.0;         ///< +-band guides (ACF/PAC stems)
    double correlation = 0.0;  ///< normal-scores correlation coefficient
    std::size_t n = 0;
    std::string title;
};

/// Equal-width histogram over [min, max]; bin_count = 0 selects the Sturges
/// rule ceil(log2 n) + 1. The rightmost bin is closed on both ends. A
/// constant series yields a single unit-width bin holding all n values.
PlotData histogram(const TimeSeries& series, int bin_count = 0);

/// Normal scores plot: sorted observations against standard normal quantiles
/// at plotting positions (i - 0.375) / (n + 0.25), with the correlation
/// coefficient of the point set.
PlotData normal_scores(const TimeSeries& series);

/// Standard normal quantile. Rational approximation refined by one Newton
/// step against erfc; absolute error well under 1e-6 across (0, 1).
double inverse_normal_cdf(double u);

/// The n - k pairs (z_t, z_{t+k}) in index order.
PlotData lagged_scatter(const TimeSeries& series, int k);

/// The pairs (t, z_t), t = 1..n.
PlotData time_plot(const TimeSeries& series);

/// Stem-plot data for a correlation profile; band > 0 draws +-band guides.
PlotData acf_stem(const LagProfile& profile, double band = 0.0);
PlotData pac_stem(const PacProfile& profile);

}  // namespace tsfine
