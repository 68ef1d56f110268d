#include "glg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "glg/error.hpp"
#include "glg/rng.hpp"

namespace glg {

SpectralBasis::SpectralBasis(std::vector<double> eigenvalues,
                             std::vector<double> eigenvectors, std::size_t n)
    : n_(n), eigenvalues_(std::move(eigenvalues)), eigenvectors_(std::move(eigenvectors)) {
    if (eigenvalues_.size() != n_ || eigenvectors_.size() != n_ * n_) {
        throw Error(ErrorCode::DimensionMismatch, "spectral basis: inconsistent sizes");
    }
}

SpectralBasis eigendecompose(const Laplacian& L, std::size_t exact_mode_cap) {
    std::size_t n = L.size();
    if (n > exact_mode_cap) {
        throw Error(ErrorCode::TooLargeForExactMode,
                    "eigendecompose: n=" + std::to_string(n) + " exceeds exact-mode cap " +
                        std::to_string(exact_mode_cap));
    }
    Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double v = L.entry(i, j);
            if (v != 0.0) {
                dense(i, j) = v;
                dense(j, i) = v;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::NumericalFailure, "eigendecompose: solver did not converge");
    }

    std::vector<double> vals(n);
    std::vector<double> vecs(n * n);
    for (std::size_t l = 0; l < n; ++l) {
        vals[l] = solver.eigenvalues()(l);
        // Sign convention: largest-magnitude entry positive, first index wins
        // ties. Near-ties (within 1e-12 relative) count as ties so that
        // last-ulp solver noise cannot move the pivot between backends.
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            best = std::max(best, std::fabs(solver.eigenvectors()(i, l)));
        }
        std::size_t arg = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (std::fabs(solver.eigenvectors()(i, l)) >= best * (1.0 - 1e-12)) {
                arg = i;
                break;
            }
        }
        double flip = solver.eigenvectors()(arg, l) < 0.0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            vecs[l * n + i] = flip * solver.eigenvectors()(i, l);
        }
    }
    return SpectralBasis(std::move(vals), std::move(vecs), n);
}

std::vector<double> gft(const SpectralBasis& basis, const std::vector<double>& f) {
    std::size_t n = basis.size();
    if (f.size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "gft: signal length " + std::to_string(f.size()) + " vs basis size " +
                        std::to_string(n));
    }
    const std::vector<double>& U = basis.eigenvector_data();
    std::vector<double> coeffs(n, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        double acc = 0.0;
        const double* col = &U[l * n];
        for (std::size_t i = 0; i < n; ++i) acc += col[i] * f[i];
        coeffs[l] = acc;
    }
    return coeffs;
}

std::vector<double> igft(const SpectralBasis& basis, const std::vector<double>& coeffs) {
    std::size_t n = basis.size();
    if (coeffs.size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "igft: coefficient length " + std::to_string(coeffs.size()) +
                        " vs basis size " + std::to_string(n));
    }
    const std::vector<double>& U = basis.eigenvector_data();
    std::vector<double> f(n, 0.0);
    for (std::size_t l = 0; l < n; ++l) {
        double c = coeffs[l];
        if (c == 0.0) continue;
        const double* col = &U[l * n];
        for (std::size_t i = 0; i < n; ++i) f[i] += c * col[i];
    }
    return f;
}

std::vector<double> apply_filter_exact(const SpectralBasis& basis,
                                       const SpectralKernel& h,
                                       const std::vector<double>& f) {
    std::vector<double> coeffs = gft(basis, f);
    const std::vector<double>& lam = basis.eigenvalues();
    for (std::size_t l = 0; l < coeffs.size(); ++l) coeffs[l] *= h(lam[l]);
    return igft(basis, coeffs);
}

double estimate_lambda_max(const Laplacian& L) {
    std::size_t n = L.size();
    if (n == 0) return 0.0;
    // Seeded start vector; its component along the (lambda = 0) constant
    // eigenvector dies after one multiply, everything else is generic.
    Rng rng(0x1f2e3d4c5b6a7988ULL);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.uniform01() + 1e-3;
    std::vector<double> w(n);
    double prev = 0.0;
    std::size_t max_iters = 10 * n + 10;
    for (std::size_t it = 0; it < max_iters; ++it) {
        L.multiply(v.data(), w.data());
        double norm = 0.0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0.0) return 0.0;   // edgeless graph: spectrum is all zeros
        double est = 0.0;
        for (std::size_t i = 0; i < n; ++i) est += v[i] * w[i];
        double vnorm2 = 0.0;
        for (double x : v) vnorm2 += x * x;
        est /= vnorm2;   // Rayleigh quotient
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        if (it > 0 && std::fabs(est - prev) <= 1e-6 * std::fabs(est)) {
            return est * 1.01;
        }
        prev = est;
    }
    throw Error(ErrorCode::NoConvergence,
                "estimate_lambda_max: no convergence within " +
                    std::to_string(max_iters) + " iterations");
}

ChebyshevApproximant::ChebyshevApproximant(const SpectralKernel& h, std::size_t order,
                                           double lambda_max_estimate)
    : lambda_max_(lambda_max_estimate) {
    if (order < 1) {
        throw Error(ErrorCode::BadK, "chebyshev: order must be >= 1");
    }
    if (!(lambda_max_ > 0.0)) {
        throw Error(ErrorCode::NumericalFailure,
                    "chebyshev: lambda_max estimate must be positive");
    }
    std::size_t m = order + 1;
    // Kernel samples at the Chebyshev points of [0, lambda_max].
    std::vector<double> samples(m);
    const double pi = 3.14159265358979323846;
    for (std::size_t j = 0; j < m; ++j) {
        double x = std::cos(pi * (static_cast<double>(j) + 0.5) / static_cast<double>(m));
        samples[j] = h(lambda_max_ * (x + 1.0) / 2.0);
    }
    coeff_.assign(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            acc += samples[j] *
                   std::cos(pi * static_cast<double>(k) *
                            (static_cast<double>(j) + 0.5) / static_cast<double>(m));
        }
        coeff_[k] = (k == 0 ? 1.0 : 2.0) * acc / static_cast<double>(m);
        if (!std::isfinite(coeff_[k])) {
            throw Error(ErrorCode::NumericalFailure, "chebyshev: non-finite coefficient");
        }
    }
}

std::vector<double> ChebyshevApproximant::apply(const Laplacian& L,
                                                const std::vector<double>& f) const {
    std::size_t n = L.size();
    if (f.size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "chebyshev apply: signal length " + std::to_string(f.size()) +
                        " vs graph size " + std::to_string(n));
    }
    // Recurrence in the shifted operator X = (2/lambda_max) L - I.
    double scale = 2.0 / lambda_max_;
    std::vector<double> t_prev = f;
    std::vector<double> t_cur(n);
    std::vector<double> tmp(n);
    L.multiply(f.data(), tmp.data());
    for (std::size_t i = 0; i < n; ++i) t_cur[i] = scale * tmp[i] - f[i];
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = coeff_[0] * t_prev[i] + coeff_[1] * t_cur[i];
    }
    std::vector<double> t_next(n);
    for (std::size_t k = 2; k < coeff_.size(); ++k) {
        L.multiply(t_cur.data(), tmp.data());
        for (std::size_t i = 0; i < n; ++i) {
            t_next[i] = 2.0 * (scale * tmp[i] - t_cur[i]) - t_prev[i];
        }
        double c = coeff_[k];
        for (std::size_t i = 0; i < n; ++i) out[i] += c * t_next[i];
        std::swap(t_prev, t_cur);
        std::swap(t_cur, t_next);
    }
    return out;
}

std::vector<double> apply_filter_chebyshev(const Laplacian& L, const SpectralKernel& h,
                                           const std::vector<double>& f,
                                           std::size_t order,
                                           double lambda_max_estimate) {
    ChebyshevApproximant approx(h, order, lambda_max_estimate);
    return approx.apply(L, f);
}

} // namespace glg
