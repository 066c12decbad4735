#include "tsfine/process_model.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "tsfine/errors.hpp"

namespace tsfine {

namespace {

void require_finite(const std::vector<double>& coeffs, const char* what) {
    for (double c : coeffs) {
        if (!std::isfinite(c)) {
            throw InputError(std::string(what) + " coefficient is not finite");
        }
    }
}

// G^p - phi_1 G^{p-1} - ... - phi_p, by Horner.
std::complex<double> char_poly(const std::vector<double>& phi,
                               std::complex<double> g) {
    std::complex<double> acc(1.0, 0.0);
    for (double c : phi) acc = acc * g - c;
    return acc;
}

std::complex<double> char_poly_deriv(const std::vector<double>& phi,
                                     std::complex<double> g) {
    const int p = static_cast<int>(phi.size());
    std::complex<double> acc(static_cast<double>(p), 0.0);
    for (int i = 1; i < p; ++i) acc = acc * g - phi[i - 1] * (p - i);
    return acc;
}

double l2_norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

Eigen::MatrixXd toeplitz_from(const std::vector<double>& r, int k) {
    Eigen::MatrixXd m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = r[std::abs(i - j)];
    return m;
}

}  // namespace

RootAnalysis characteristic_roots(const std::vector<double>& phi) {
    require_finite(phi, "AR");
    const int p = static_cast<int>(phi.size());

    RootAnalysis out;
    if (p == 0) return out;  // no roots, stationary by convention

    // Companion matrix of the monic polynomial, then Newton polish: the
    // contract is the residual bound, not the eigenvalue accuracy.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(p, p);
    for (int i = 1; i < p; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < p; ++i) companion(i, p - 1) = phi[p - 1 - i];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
    if (solver.info() != Eigen::Success) {
        throw NumericError("companion eigenvalue computation failed");
    }

    std::vector<std::complex<double>> roots(p);
    for (int i = 0; i < p; ++i) roots[i] = solver.eigenvalues()(i);

    const double bound = 1e-8 * std::max(1.0, l2_norm(phi));
    for (auto& g : roots) {
        for (int iter = 0; iter < 24; ++iter) {
            const auto f = char_poly(phi, g);
            if (std::abs(f) <= 1e-3 * bound) break;
            const auto df = char_poly_deriv(phi, g);
            if (df == std::complex<double>(0.0, 0.0)) break;
            const auto step = f / df;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            g -= step;
        }
        if (std::abs(char_poly(phi, g)) > bound) {
            throw NumericError("characteristic root failed the residual bound");
        }
    }

    std::sort(roots.begin(), roots.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) {
                  const double ma = std::abs(a), mb = std::abs(b);
                  if (ma != mb) return ma > mb;
                  if (a.real() != b.real()) return a.real() > b.real();
                  return a.imag() > b.imag();
              });

    out.roots = std::move(roots);
    out.moduli.resize(p);
    for (int i = 0; i < p; ++i) out.moduli[i] = std::abs(out.roots[i]);
    const double max_mod = out.moduli[0];
    out.stationary = max_mod < 1.0 - kStationarityEpsilon;
    out.margin = 1.0 - max_mod;
    return out;
}

bool is_stationary(const std::vector<double>& phi) {
    return characteristic_roots(phi).stationary;
}

LagProfile theoretical_acf(const ModelSpec& spec, int max_lag) {
    if (max_lag < 0) throw InputError("max_lag must be >= 0");
    if (spec.q() != 0 || spec.d != 0) {
        throw InputError("theoretical ACF is defined for pure AR models (q = 0, d = 0)");
    }
    if (!std::isfinite(spec.sigma2) || spec.sigma2 <= 0.0) {
        throw InputError("sigma2 must be positive and finite");
    }
    require_finite(spec.phi, "AR");
    if (!is_stationary(spec.phi)) {
        throw ModelDomainError("AR part is not stationary");
    }

    const int p = spec.p();
    const int top = std::max(max_lag, p);
    std::vector<double> rho(top + 1, 0.0);
    rho[0] = 1.0;

    if (p > 0) {
        // rho(k) = sum_i phi_i rho(|k-i|), k = 1..p, using rho(-m) = rho(m):
        // move the unknown rho(1)..rho(p) left, the rho(0) contribution right.
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(p, p);
        Eigen::VectorXd b(p);
        for (int k = 1; k <= p; ++k) {
            b(k - 1) = spec.phi[k - 1];
            for (int j = 1; j <= p; ++j) {
                double c = (k == j) ? 1.0 : 0.0;
                if (k - j >= 1) c -= spec.phi[k - j - 1];
                if (k + j <= p) c -= spec.phi[k + j - 1];
                a(k - 1, j - 1) = c;
            }
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
        if (!lu.isInvertible()) {
            throw NumericError("singular system while solving for the theoretical ACF");
        }
        const Eigen::VectorXd x = lu.solve(b);
        for (int k = 1; k <= p; ++k) rho[k] = x(k - 1);
        for (int k = p + 1; k <= top; ++k) {
            double acc = 0.0;
            for (int i = 1; i <= p; ++i) acc += spec.phi[i - 1] * rho[k - i];
            rho[k] = acc;
        }
    }

    double denom = 1.0;
    for (int i = 1; i <= p; ++i) denom -= spec.phi[i - 1] * rho[i];
    if (!(denom > 0.0) || !std::isfinite(denom)) {
        throw NumericError("non-positive variance denominator in theoretical ACF");
    }

    LagProfile out;
    out.values.assign(rho.begin(), rho.begin() + max_lag + 1);
    out.gamma0 = spec.sigma2 / denom;
    out.kind = ProfileKind::Theoretical;
    return out;
}

LagProfile acf_closed_form(const std::vector<double>& phi, int max_lag) {
    if (max_lag < 0) throw InputError("max_lag must be >= 0");
    require_finite(phi, "AR");

    const int p = static_cast<int>(phi.size());
    const RootAnalysis analysis = characteristic_roots(phi);
    if (!analysis.stationary) {
        throw ModelDomainError("AR part is not stationary");
    }

    if (p == 0) {
        LagProfile out;
        out.values.assign(max_lag + 1, 0.0);
        out.values[0] = 1.0;
        out.gamma0 = 1.0;
        return out;
    }

    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (std::abs(analysis.roots[i] - analysis.roots[j]) <= kDistinctRootTolerance) {
                throw UnsupportedCaseError(
                    "repeated characteristic roots: the distinct-root expansion does not apply");
            }
        }
    }

    ModelSpec ar;
    ar.phi = phi;
    ar.sigma2 = 1.0;
    const LagProfile base = theoretical_acf(ar, p);  // rho(0..p), gamma0

    // Match C_1..C_p to rho(0)..rho(p-1): a complex Vandermonde system.
    Eigen::MatrixXcd v(p, p);
    Eigen::VectorXcd rhs(p);
    for (int i = 0; i < p; ++i) v(0, i) = 1.0;
    for (int k = 1; k < p; ++k)
        for (int i = 0; i < p; ++i) v(k, i) = v(k - 1, i) * analysis.roots[i];
    for (int k = 0; k < p; ++k) rhs(k) = base.values[k];

    const Eigen::VectorXcd c = v.partialPivLu().solve(rhs);

    LagProfile out;
    out.values.resize(max_lag + 1);
    std::vector<std::complex<double>> term(p);
    for (int i = 0; i < p; ++i) term[i] = c(i);
    for (int k = 0; k <= max_lag; ++k) {
        std::complex<double> sum(0.0, 0.0);
        for (int i = 0; i < p; ++i) sum += term[i];
        if (std::abs(sum.imag()) > 1e-8) {
            throw NumericError("closed-form ACF evaluation left a non-real part at lag " +
                               std::to_string(k));
        }
        out.values[k] = sum.real();
        for (int i = 0; i < p; ++i) term[i] *= analysis.roots[i];
    }
    if (std::abs(out.values[0] - 1.0) > 1e-8) {
        throw NumericError("closed-form expansion failed to reproduce rho(0) = 1");
    }
    out.values[0] = 1.0;
    out.gamma0 = base.gamma0;
    out.kind = ProfileKind::Theoretical;
    return out;
}

PacProfile theoretical_pac(const LagProfile& rho, int max_k) {
    if (max_k < 1) throw InputError("max_k must be >= 1");
    if (static_cast<int>(rho.values.size()) < max_k + 1) {
        throw InputError("profile must cover lags 0..max_k");
    }
    if (rho.values[0] != 1.0) {
        throw InputError("profile must equal 1 at lag 0");
    }

    PacProfile out;
    out.kind = rho.kind;
    out.values.reserve(max_k);
    for (int k = 1; k <= max_k; ++k) {
        const Eigen::MatrixXd r = toeplitz_from(rho.values, k);
        Eigen::VectorXd rhs(k);
        for (int i = 0; i < k; ++i) rhs(i) = rho.values[i + 1];
        Eigen::FullPivLU<Eigen::MatrixXd> lu(r);
        if (!lu.isInvertible()) {
            throw NumericError("singular partial autocorrelation system at order " +
                               std::to_string(k));
        }
        const Eigen::VectorXd x = lu.solve(rhs);
        out.values.push_back(x(k - 1));
    }
    return out;
}

std::vector<double> yule_walker_coeffs(const LagProfile& rho, int p) {
    if (p < 1) throw InputError("order p must be >= 1");
    if (static_cast<int>(rho.values.size()) < p + 1) {
        throw InputError("profile must cover lags 0..p");
    }
    if (rho.values[0] != 1.0) {
        throw InputError("profile must equal 1 at lag 0");
    }

    const Eigen::MatrixXd r = toeplitz_from(rho.values, p);
    Eigen::VectorXd rhs(p);
    for (int i = 0; i < p; ++i) rhs(i) = rho.values[i + 1];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(r);
    if (!lu.isInvertible()) {
        throw NumericError("degenerate input: singular Yule-Walker system");
    }
    const Eigen::VectorXd x = lu.solve(rhs);
    return std::vector<double>(x.data(), x.data() + p);
}

}  // namespace tsfine
