#include "tsfine/identification.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

// Upper chi-square critical values for df = 1..40, frozen from standard
// tables and verified in the test suite against an incomplete-gamma oracle.
constexpr int kChi2MaxDf = 40;
constexpr double kChi2Crit95[kChi2MaxDf] = {
    3.841458820694124, 5.991464547107979, 7.8147279032511792, 9.487729036781154,
    11.070497693516351, 12.591587243743977, 14.067140449340169, 15.507313055865451,
    16.918977604620448, 18.307038053275146, 19.675137572682491, 21.026069817483069,
    22.362032494826934, 23.684791304840576, 24.995790139728616, 26.296227604864232,
    27.587111638275339, 28.869299430392623, 30.143527205646159, 31.410432844230918,
    32.670573340917315, 33.924438471443807, 35.17246162690806, 36.415028501807313,
    37.652484133482773, 38.885138659830055, 40.113272069413625, 41.337138151427389,
    42.55696780429269, 43.772971825742189, 44.985343280365129, 46.194259520278472,
    47.399883919080928, 48.602367367294164, 49.80184956820181, 50.998460165710647,
    52.192319730102895, 53.383540622969356, 54.572227758941736, 55.758479278887023,
};
constexpr double kChi2Crit99[kChi2MaxDf] = {
    6.6348966010212145, 9.2103403719761801, 11.344866730144373, 13.276704135987622,
    15.086272469388989, 16.811893829770927, 18.475306906582357, 20.090235029663233,
    21.665994333461924, 23.209251158954356, 24.724970311318277, 26.216967305535853,
    27.688249610457049, 29.141237740672796, 30.577914166892491, 31.999926908815176,
    33.408663605004612, 34.805305734705065, 36.190869129270041, 37.566234786625067,
    38.932172683516072, 40.289360437593864, 41.638398118858476, 42.979820139351652,
    44.314104896219149, 45.641682666283167, 46.962942124751436, 48.278235770315483,
    49.587884472898807, 50.892181311517071, 52.191394833191929, 53.485771836235351,
    54.775539760110348, 56.060908747789057, 57.342073433859198, 58.619214501687061,
    59.892500045086891, 61.1620867636897, 62.428121016184903, 63.690739751564465,
};

}  // namespace

std::string to_string(AcfClassification c) {
    switch (c) {
        case AcfClassification::Decaying: return "decaying";
        case AcfClassification::Persistent: return "persistent";
        case AcfClassification::Cutoff: return "cutoff";
        case AcfClassification::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

PacCutoffResult pac_cutoff(const PacProfile& pac, std::size_t n, double z_id) {
    if (pac.values.empty()) throw InputError("PAC profile is empty");
    if (n < 4) throw InputError("sample size must be >= 4");
    if (!(z_id > 0.0) || !std::isfinite(z_id)) {
        throw InputError("z_id must be positive and finite");
    }

    PacCutoffResult out;
    out.band = z_id / std::sqrt(static_cast<double>(n));
    for (int k = 1; k <= pac.max_k(); ++k) {
        // values exactly on the band do not count as significant
        if (std::abs(pac.values[k - 1]) > out.band) {
            out.significant_lags.push_back(k);
        }
    }
    out.order_estimate =
        out.significant_lags.empty() ? 0 : out.significant_lags.back();
    return out;
}

WhitenessResult portmanteau_whiteness(const LagProfile& acf, std::size_t n,
                                      int m, double alpha) {
    if (m < 1 || m > kChi2MaxDf) {
        throw InputError("lag count m must lie in 1..40 (embedded table range)");
    }
    if (acf.max_lag() < m) {
        throw InputError("profile must cover lags 1..m");
    }
    if (n <= static_cast<std::size_t>(m)) {
        throw InputError("sample size must exceed m");
    }
    const double* table = nullptr;
    if (alpha == 0.05) table = kChi2Crit95;
    else if (alpha == 0.01) table = kChi2Crit99;
    else throw InputError("alpha must be 0.05 or 0.01");

    const double dn = static_cast<double>(n);
    double sum = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double rk = acf.values[k];
        sum += rk * rk / (dn - k);
    }

    WhitenessResult out;
    out.q = dn * (dn + 2.0) * sum;
    out.lags_used = m;
    out.threshold = table[m - 1];
    out.alpha = alpha;
    out.pass = out.q <= out.threshold;
    return out;
}

AcfClassification acf_decay_check(const LagProfile& acf, std::size_t n,
                                  double band_multiplier, int run_length) {
    const int lags = acf.max_lag();
    if (lags < 10) throw InputError("acf_decay_check needs at least 10 lags");
    if (n < 2) throw InputError("sample size must be >= 2");
    if (run_length < 1) throw InputError("run_length must be >= 1");

    const double band = band_multiplier / std::sqrt(static_cast<double>(n));
    const auto inside = [&](int k) { return std::abs(acf.values[k]) <= band; };

    // Cut-off: a short all-outside prefix (<= 3 lags), everything after inside.
    int prefix = 0;
    while (prefix < lags && !inside(prefix + 1)) ++prefix;
    if (prefix >= 1 && prefix <= 3) {
        bool rest_inside = true;
        for (int k = prefix + 1; k <= lags; ++k) {
            if (!inside(k)) {
                rest_inside = false;
                break;
            }
        }
        if (rest_inside) return AcfClassification::Cutoff;
    }

    // Decaying: falls inside the band within the first ceil(10 + ln n) lags
    // and stays there for run_length consecutive lags.
    const int window = static_cast<int>(
        std::ceil(10.0 + std::log(static_cast<double>(n))));
    for (int start = 1; start <= std::min(window, lags - run_length + 1); ++start) {
        bool run = true;
        for (int k = start; k < start + run_length; ++k) {
            if (!inside(k)) {
                run = false;
                break;
            }
        }
        if (run) return AcfClassification::Decaying;
    }

    // Persistent: outside the band at more than half the available lags.
    int outside = 0;
    for (int k = 1; k <= lags; ++k) {
        if (!inside(k)) ++outside;
    }
    if (2 * outside > lags) return AcfClassification::Persistent;

    return AcfClassification::Inconclusive;
}

IdentificationVerdict classify(const TimeSeries& series,
                               const ClassifyOptions& options) {
    const std::size_t n = series.values.size();
    if (n < 30) throw InputError("classify needs at least 30 observations");
    if (options.max_lag < 10) throw InputError("max_lag must be >= 10");

    const LagProfile acf = empirical_acf(series, options.max_lag);
    const PacProfile pac = empirical_pac(series, options.max_lag, options.z_plot);
    const PacCutoffResult cut = pac_cutoff(pac, n, options.z_id);
    const int m = std::min(options.whiteness_lags, options.max_lag);

    IdentificationVerdict out;
    out.order_estimate = cut.order_estimate;
    out.significant_lags = cut.significant_lags;
    out.decision_band = cut.band;
    out.whiteness = portmanteau_whiteness(acf, n, m, options.alpha);
    out.acf_classification = acf_decay_check(
        acf, n, options.decay_band_multiplier, options.decay_run_length);
    out.white_noise = (out.order_estimate == 0) && out.whiteness.pass;
    out.n = n;
    return out;
}

}  // namespace tsfine
