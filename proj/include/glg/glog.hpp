#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glg/graph.hpp"
#include "glg/spectral.hpp"

namespace glg {

struct GlogSignal {
    std::vector<double> values;
    double sigma;
};

struct ZeroCrossingPair {
    std::size_t i;
    std::size_t j;
    double score;   // |g(i) - g(j)|
};

struct EdgeNodeConfiguration {
    std::vector<std::uint8_t> bits;
    std::string slice_label;
};

struct ThresholdPolicy {
    enum class Kind { Quartile, MeanStd };
    Kind kind;
    double value;   // quantile q in (0,1), or the std multiplier k >= 0

    static ThresholdPolicy quartile(double q);
    static ThresholdPolicy mean_std(double k);
};

enum class FilterMode { Exact, Chebyshev };

struct GlogOptions {
    double sigma = 3.0;
    FilterMode mode = FilterMode::Chebyshev;
    std::size_t chebyshev_order = 50;
    // Exact mode needs a basis; Chebyshev mode needs a lambda_max estimate.
    const SpectralBasis* basis = nullptr;
    std::optional<double> lambda_max_estimate;
};

// GLoG-filter one slice. Exact mode uses the provided basis; Chebyshev mode
// estimates lambda_max on demand when no estimate is supplied.
GlogSignal glog_filter(const Laplacian& L, const std::vector<double>& f,
                       const GlogOptions& opts);

// All edges whose endpoint values have strictly opposite signs, sorted by
// (i, j). A zero value never participates.
std::vector<ZeroCrossingPair> find_zero_crossing_pairs(const WeightedGraph& g,
                                                       const GlogSignal& s);

// Linear-interpolation quantile of a sample (the rule behind quartile
// thresholds); exposed for tests.
double interpolated_quantile(std::vector<double> values, double q);

// Pairs whose score strictly exceeds the policy threshold.
std::vector<ZeroCrossingPair> threshold_pairs(const std::vector<ZeroCrossingPair>& pairs,
                                              const ThresholdPolicy& policy);

EdgeNodeConfiguration edge_node_configuration(const std::vector<ZeroCrossingPair>& strong,
                                              std::size_t n);

EdgeNodeConfiguration run_glog(const WeightedGraph& g, const Laplacian& L,
                               const std::vector<double>& f, const GlogOptions& opts,
                               const ThresholdPolicy& policy);

} // namespace glg
