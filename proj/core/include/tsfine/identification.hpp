#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tsfine/estimation.hpp"
#include "tsfine/process_model.hpp"
#include "tsfine/simulation.hpp"

namespace tsfine {

struct PacCutoffResult {
    int order_estimate = 0;
    std::vector<int> significant_lags;
    double band = 0.0;  ///< z_id * n^(-1/2)
};

struct WhitenessResult {
    double q = 0.0;          ///< portmanteau statistic
    int lags_used = 0;       ///< m
    double threshold = 0.0;  ///< chi-square critical value
    double alpha = 0.05;
    bool pass = false;
};

enum class AcfClassification { Decaying, Persistent, Cutoff, Inconclusive };

std::string to_string(AcfClassification c);

struct ClassifyOptions {
    int max_lag = 25;
    double z_id = 3.0;    ///< decision band multiplier for order estimation
    double z_plot = 1.96; ///< plotting band multiplier
    int whiteness_lags = 20;
    double alpha = 0.05;
    double decay_band_multiplier = 2.0;
    int decay_run_length = 5;
};

struct IdentificationVerdict {
    int order_estimate = 0;
    std::vector<int> significant_lags;
    double decision_band = 0.0;
    WhitenessResult whiteness;
    AcfClassification acf_classification = AcfClassification::Inconclusive;
    bool white_noise = false;
    std::size_t n = 0;
};

/// Largest lag whose |phi_kk| exceeds z_id * n^(-1/2) (strict inequality);
/// 0 when no lag does. The default z_id = 3.0 keeps the per-lag false alarm
/// rate near 0.3% so a 25-lag scan stays reliable.
PacCutoffResult pac_cutoff(const PacProfile& pac, std::size_t n,
                           double z_id = 3.0);

/// Ljung-Box statistic Q = n (n + 2) sum_{k=1..m} r_k^2 / (n - k) against the
/// chi-square critical value at the given level (embedded table, m = 1..40,
/// alpha in {0.05, 0.01}).
WhitenessResult portmanteau_whiteness(const LagProfile& acf, std::size_t n,
                                      int m, double alpha);

/// Coarse shape classification of a sample ACF relative to the
/// +-band_multiplier * n^(-1/2) band. The thresholds are heuristics and are
/// exposed as parameters.
AcfClassification acf_decay_check(const LagProfile& acf, std::size_t n,
                                  double band_multiplier = 2.0,
                                  int run_length = 5);

/// Full identification pass: sample ACF and PAC, PAC cut-off order estimate,
/// portmanteau whiteness, ACF shape. The series is judged white noise iff the
/// order estimate is 0 and the whiteness test passes.
IdentificationVerdict classify(const TimeSeries& series,
                               const ClassifyOptions& options = {});

}  // namespace tsfine
