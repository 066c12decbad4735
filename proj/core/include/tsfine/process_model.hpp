#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tsfine {

/// Roots this close to the unit circle are treated as non-stationary.
inline constexpr double kStationarityEpsilon = 1e-8;

/// Characteristic roots closer than this are treated as repeated.
inline constexpr double kDistinctRootTolerance = 1e-6;

/// ARIMA(p, d, q) model parameters. Orders p and q are implicit in the
/// lengths of `phi` and `theta`.
struct ModelSpec {
    std::vector<double> phi;     ///< AR coefficients, lag 1..p
    std::vector<double> theta;   ///< MA coefficients, lag 1..q
    double theta0 = 0.0;         ///< drift
    int d = 0;                   ///< differencing order
    double sigma2 = 1.0;         ///< innovation variance
    double mu = 0.0;             ///< process mean

    int p() const { return static_cast<int>(phi.size()); }
    int q() const { return static_cast<int>(theta.size()); }
};

/// Characteristic roots of an AR polynomial with stationarity verdict.
struct RootAnalysis {
    std::vector<std::complex<double>> roots;  ///< sorted by descending modulus
    std::vector<double> moduli;
    bool stationary = true;
    double margin = 1.0;  ///< 1 - max|G|
};

enum class ProfileKind { Theoretical, Empirical };

/// Autocorrelations indexed by lag 0..K, plus the lag-0 autocovariance.
struct LagProfile {
    std::vector<double> values;  ///< values[k] = rho(k) or r_k; values[0] == 1
    double gamma0 = 0.0;         ///< autocovariance at lag 0
    ProfileKind kind = ProfileKind::Theoretical;
    std::size_t n = 0;                 ///< sample size (empirical only)
    std::size_t reliable_max_lag = 0;  ///< lags above n/4 are flagged (empirical only)

    int max_lag() const { return static_cast<int>(values.size()) - 1; }
};

/// Partial autocorrelations phi_kk for k = 1..K.
struct PacProfile {
    std::vector<double> values;  ///< values[k-1] = phi_kk
    double band = 0.0;           ///< significance half-width (empirical only)
    ProfileKind kind = ProfileKind::Theoretical;

    int max_k() const { return static_cast<int>(values.size()); }
};

/// All p roots of G^p - phi_1 G^{p-1} - ... - phi_p = 0, polished until the
/// polynomial residual is below 1e-8 * max(1, ||phi||).
RootAnalysis characteristic_roots(const std::vector<double>& phi);

/// True iff every characteristic root satisfies |G| < 1 - kStationarityEpsilon.
bool is_stationary(const std::vector<double>& phi);

/// Exact ACF of a stationary pure AR model (q = 0, d = 0): rho(1)..rho(p) from
/// the linear system implied by the ACF recursion, later lags by the recursion
/// itself. gamma0 = sigma2 / (1 - sum_i phi_i rho(i)).
LagProfile theoretical_acf(const ModelSpec& spec, int max_lag);

/// ACF through the distinct-root expansion rho(k) = sum_i C_i G_i^k. The
/// constants are matched to rho(0)..rho(p-1); evaluation at higher lags is an
/// independent route that cross-checks theoretical_acf. Repeated roots raise
/// UnsupportedCaseError. gamma0 is reported for unit innovation variance.
LagProfile acf_closed_form(const std::vector<double>& phi, int max_lag);

/// Partial autocorrelations by direct dense solves of the lag-k Yule-Walker
/// systems over the given profile.
PacProfile theoretical_pac(const LagProfile& rho, int max_k);

/// AR coefficients from a profile: solves the order-p Yule-Walker system.
std::vector<double> yule_walker_coeffs(const LagProfile& rho, int p);

}  // namespace tsfine
