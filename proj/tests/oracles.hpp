// Test-only oracles and generators. Everything here is deliberately
// independent of the library implementation paths it is used to check:
// the dense solver is hand-rolled Gaussian elimination (no Eigen), the
// chi-square quantile comes from an incomplete-gamma series, and the model
// generators build coefficients from first principles.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

// --- dense linear algebra -------------------------------------------------

// Gaussian elimination with partial pivoting; a is row-major k x k.
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const std::size_t k = b.size();
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < k; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[pivot][col])) pivot = row;
        }
        if (a[pivot][col] == 0.0) throw std::runtime_error("oracle: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t row = col + 1; row < k; ++row) {
            const double f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < k; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    std::vector<double> x(k);
    for (std::size_t i = k; i-- > 0;) {
        double s = b[i];
        for (std::size_t j = i + 1; j < k; ++j) s -= a[i][j] * x[j];
        x[i] = s / a[i][i];
    }
    return x;
}

// Solves the order-k Toeplitz system R phi = r over correlations r[0..k].
inline std::vector<double> toeplitz_solve(const std::vector<double>& r, int k) {
    std::vector<std::vector<double>> a(k, std::vector<double>(k));
    std::vector<double> b(k);
    for (int i = 0; i < k; ++i) {
        b[i] = r[i + 1];
        for (int j = 0; j < k; ++j) a[i][j] = r[std::abs(i - j)];
    }
    return solve_dense(std::move(a), std::move(b));
}

// --- distributions ----------------------------------------------------------

// Regularized lower incomplete gamma P(a, x); series and continued fraction.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw std::invalid_argument("oracle: gamma_p domain");
    if (x == 0.0) return 0.0;
    const double log_prefix = a * std::log(x) - x - std::lgamma(a);
    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        for (int n = 1; n < 500; ++n) {
            term *= x / (a + n);
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(log_prefix);
    }
    // Lentz continued fraction for Q(a, x)
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(log_prefix) * h;
}

inline double chi2_cdf(double x, int df) { return gamma_p(df / 2.0, x / 2.0); }

// Upper quantile via bisection; accurate to ~1e-11 absolute.
inline double chi2_quantile(double prob, int df) {
    double lo = 0.0, hi = 10.0 * df + 100.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (chi2_cdf(mid, df) < prob) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// --- statistics helpers -----------------------------------------------------

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / (std::sqrt(sxx) * std::sqrt(syy));
}

inline double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / v.size();
}

inline double variance_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return s / v.size();
}

// --- random model generators ------------------------------------------------

// Stationary AR(p) coefficients from reflection coefficients in (-kmax, kmax)
// via the step-up recursion; stationarity holds by construction.
inline std::vector<double> random_stationary_phi(std::mt19937_64& rng, int p,
                                                 double kmax = 0.8) {
    std::uniform_real_distribution<double> uni(-kmax, kmax);
    std::vector<double> phi;
    for (int k = 1; k <= p; ++k) {
        const double kappa = uni(rng);
        std::vector<double> next(k);
        for (int j = 0; j + 1 < k; ++j) next[j] = phi[j] - kappa * phi[k - 2 - j];
        next[k - 1] = kappa;
        phi = std::move(next);
    }
    return phi;
}

// Expands prod_i (G - root_i) and returns phi such that the polynomial is
// G^p - phi_1 G^{p-1} - ... - phi_p. Roots must come in conjugate pairs.
inline std::vector<double> phi_from_roots(
    const std::vector<std::complex<double>>& roots) {
    std::vector<std::complex<double>> coeff{1.0};  // leading term
    for (const auto& root : roots) {
        std::vector<std::complex<double>> next(coeff.size() + 1);
        for (std::size_t i = 0; i < coeff.size(); ++i) {
            next[i] += coeff[i];
            next[i + 1] -= coeff[i] * root;
        }
        coeff = std::move(next);
    }
    std::vector<double> phi(coeff.size() - 1);
    for (std::size_t i = 1; i < coeff.size(); ++i) phi[i - 1] = -coeff[i].real();
    return phi;
}

// Distinct roots inside |G| <= max_mod with pairwise separation >= min_sep;
// real roots and conjugate pairs mixed at random.
inline std::vector<std::complex<double>> random_distinct_roots(
    std::mt19937_64& rng, int p, double min_sep = 0.05, double max_mod = 0.92) {
    std::uniform_real_distribution<double> mod(0.1, max_mod);
    std::uniform_real_distribution<double> arg(0.15, 3.0);
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<std::complex<double>> roots;
        int remaining = p;
        while (remaining > 0) {
            if (remaining >= 2 && coin(rng)) {
                const double m = mod(rng), t = arg(rng);
                roots.emplace_back(m * std::cos(t), m * std::sin(t));
                roots.emplace_back(m * std::cos(t), -m * std::sin(t));
                remaining -= 2;
            } else {
                roots.emplace_back(coin(rng) ? mod(rng) : -mod(rng), 0.0);
                --remaining;
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < roots.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < roots.size(); ++j) {
                if (std::abs(roots[i] - roots[j]) < min_sep) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return roots;
    }
}

}  // namespace oracle
