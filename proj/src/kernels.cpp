#include "glg/kernels.hpp"

#include <cmath>
#include <string>

#include "glg/error.hpp"

namespace glg {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_sigma(double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
        throw Error(ErrorCode::NonPositiveSigma,
                    "kernel: sigma must be positive, got " + std::to_string(sigma));
    }
}
} // namespace

SpectralKernel gaussian_kernel(double sigma) {
    check_sigma(sigma);
    double norm = 1.0 / (sigma * std::sqrt(kTwoPi));
    double inv2s2 = 1.0 / (2.0 * sigma * sigma);
    return [norm, inv2s2](double lambda) {
        return norm * std::exp(-lambda * lambda * inv2s2);
    };
}

SpectralKernel glog_kernel(double sigma) {
    check_sigma(sigma);
    double s2 = sigma * sigma;
    constexpr double kFourPiSq = 39.478417604357434475337963999505;
    return [s2](double lambda) {
        return -kFourPiSq * lambda * lambda * std::exp(-s2 * lambda * lambda);
    };
}

SpectralKernel identity_kernel() {
    return [](double) { return 1.0; };
}

} // namespace glg
