#pragma once

#include <cstddef>
#include <vector>

#include "glg/graph.hpp"
#include "glg/kernels.hpp"

namespace glg {

// Full eigendecomposition of a Laplacian: eigenvalues sorted non-decreasing,
// eigenvector columns orthonormal, each column's sign fixed so that its
// largest-magnitude entry is positive (backend sign choices are arbitrary).
class SpectralBasis {
public:
    SpectralBasis(std::vector<double> eigenvalues, std::vector<double> eigenvectors,
                  std::size_t n);

    std::size_t size() const { return n_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }

    // Column-major n x n; eigenvector l is entries [l*n, (l+1)*n).
    const std::vector<double>& eigenvector_data() const { return eigenvectors_; }
    double eigenvector(std::size_t l, std::size_t i) const {
        return eigenvectors_[l * n_ + i];
    }

private:
    std::size_t n_;
    std::vector<double> eigenvalues_;
    std::vector<double> eigenvectors_;
};

inline constexpr std::size_t kDefaultExactModeCap = 2000;

SpectralBasis eigendecompose(const Laplacian& L,
                             std::size_t exact_mode_cap = kDefaultExactModeCap);

// Forward transform: coeffs[l] = <u_l, f>.
std::vector<double> gft(const SpectralBasis& basis, const std::vector<double>& f);

// Inverse transform: f = sum_l coeffs[l] * u_l.
std::vector<double> igft(const SpectralBasis& basis, const std::vector<double>& coeffs);

// f_out = U diag(h(lambda)) U^T f.
std::vector<double> apply_filter_exact(const SpectralBasis& basis,
                                       const SpectralKernel& h,
                                       const std::vector<double>& f);

// Largest-eigenvalue upper bound: power iteration (relative-change tolerance
// 1e-6, at most 10*n iterations) inflated by 1% so the Chebyshev interval is
// guaranteed to contain the spectrum.
double estimate_lambda_max(const Laplacian& L);

// Chebyshev interpolant of a kernel on [0, lambda_max_estimate]; applying it
// needs only sparse L*vector products.
class ChebyshevApproximant {
public:
    ChebyshevApproximant(const SpectralKernel& h, std::size_t order,
                         double lambda_max_estimate);

    std::size_t order() const { return coeff_.size() - 1; }
    double lambda_max_estimate() const { return lambda_max_; }
    const std::vector<double>& coefficients() const { return coeff_; }

    std::vector<double> apply(const Laplacian& L, const std::vector<double>& f) const;

private:
    std::vector<double> coeff_;
    double lambda_max_;
};

std::vector<double> apply_filter_chebyshev(const Laplacian& L, const SpectralKernel& h,
                                           const std::vector<double>& f,
                                           std::size_t order,
                                           double lambda_max_estimate);

} // namespace glg
