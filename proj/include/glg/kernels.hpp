#pragma once

#include <functional>

namespace glg {

// A spectral filter is just a real function of the eigenvalue.
using SpectralKernel = std::function<double(double)>;

// Low-pass Gaussian, (1/(sigma*sqrt(2*pi))) * exp(-lambda^2 / (2*sigma^2)).
SpectralKernel gaussian_kernel(double sigma);

// Band-pass Laplacian-of-Gaussian, -4*pi^2*lambda^2 * exp(-sigma^2*lambda^2).
// Vanishes at lambda = 0, so constant signals filter to zero.
SpectralKernel glog_kernel(double sigma);

SpectralKernel identity_kernel();

} // namespace glg
