#pragma once

#include <cstddef>
#include <vector>

#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace tsfine {

struct SummaryStats {
    double mean = 0.0;
    double variance = 0.0;  ///< denominator n
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

/// Result of a Yule-Walker AR(p) fit.
struct FitResult {
    std::vector<double> phi_hat;
    double sigma2_hat = 0.0;
    int p = 0;
    TimeSeries residuals;  ///< length n - p
    double sample_mean = 0.0;
    double gamma0_hat = 0.0;
};

/// Output of the Levinson-Durbin order recursion: the full coefficient
/// triangle, the partial autocorrelations, and the prediction-variance ladder.
struct LevinsonResult {
    std::vector<std::vector<double>> coeffs;  ///< coeffs[k-1] = phi_k1..phi_kk
    std::vector<double> pac;                  ///< pac[k-1] = phi_kk
    std::vector<double> sigma2;  ///< sigma2[k]: innovation variance of order k
};

SummaryStats summary_stats(const TimeSeries& series);

/// Sample autocorrelations r_k: truncated cross sums over the full-sample
/// mean, denominator summed over all n terms. This biased form keeps
/// |r_k| <= 1 and the profile positive semidefinite.
LagProfile empirical_acf(const TimeSeries& series, int max_lag);

/// Order-recursive solver for the nested Toeplitz systems of a correlation
/// profile. Row k solves the k-th Yule-Walker system; pac[k-1] is its last
/// coefficient. Throws IllConditionedError when a prediction variance stops
/// being positive.
LevinsonResult levinson_durbin(const LagProfile& profile, int max_k);

/// Empirical partial autocorrelations with the +-z_plot / sqrt(n) band.
PacProfile empirical_pac(const TimeSeries& series, int max_k,
                         double z_plot = 1.96);

/// Yule-Walker AR(p) fit: coefficients from the order-p recursion over the
/// sample ACF, innovation variance gamma0_hat * (1 - sum phi_hat_i r_i),
/// residuals from residuals().
FitResult fit_ar(const TimeSeries& series, int p);

/// Innovations a_t = (z_t - mean) - sum_i phi_i (z_{t-i} - mean) for
/// t = p+1..n. The evaluation order is fixed; on a simulated series with the
/// true coefficients this reproduces aligned_noise exactly.
TimeSeries residuals(const TimeSeries& series, const std::vector<double>& phi,
                     double mean);

}  // namespace tsfine
