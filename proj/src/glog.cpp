#include "glg/glog.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "glg/error.hpp"
#include "glg/kernels.hpp"

namespace glg {

ThresholdPolicy ThresholdPolicy::quartile(double q) {
    if (!(q > 0.0 && q < 1.0)) {
        throw Error(ErrorCode::BadConfig,
                    "threshold: quantile must lie in (0,1), got " + std::to_string(q));
    }
    return {Kind::Quartile, q};
}

ThresholdPolicy ThresholdPolicy::mean_std(double k) {
    if (!(k >= 0.0)) {
        throw Error(ErrorCode::BadConfig,
                    "threshold: std multiplier must be >= 0, got " + std::to_string(k));
    }
    return {Kind::MeanStd, k};
}

GlogSignal glog_filter(const Laplacian& L, const std::vector<double>& f,
                       const GlogOptions& opts) {
    SpectralKernel kernel = glog_kernel(opts.sigma);
    if (opts.mode == FilterMode::Exact) {
        if (opts.basis == nullptr) {
            throw Error(ErrorCode::BadConfig, "glog_filter: exact mode needs a basis");
        }
        return {apply_filter_exact(*opts.basis, kernel, f), opts.sigma};
    }
    double lmax = opts.lambda_max_estimate ? *opts.lambda_max_estimate
                                           : estimate_lambda_max(L);
    return {apply_filter_chebyshev(L, kernel, f, opts.chebyshev_order, lmax), opts.sigma};
}

std::vector<ZeroCrossingPair> find_zero_crossing_pairs(const WeightedGraph& g,
                                                       const GlogSignal& s) {
    if (s.values.size() != g.node_count()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "zero crossings: signal length " + std::to_string(s.values.size()) +
                        " vs node count " + std::to_string(g.node_count()));
    }
    std::vector<ZeroCrossingPair> pairs;
    for (const WeightedEdge& e : g.edges()) {
        double a = s.values[e.src];
        double b = s.values[e.dst];
        if (a * b < 0.0) {
            pairs.push_back({e.src, e.dst, std::fabs(a - b)});
        }
    }
    // Graph edges are already sorted by (src, dst).
    return pairs;
}

double interpolated_quantile(std::vector<double> values, double q) {
    if (values.empty()) {
        throw Error(ErrorCode::EmptySeries, "quantile of empty sample");
    }
    std::sort(values.begin(), values.end());
    double pos = q * static_cast<double>(values.size() - 1);
    std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[lo + 1] - values[lo]);
}

std::vector<ZeroCrossingPair> threshold_pairs(const std::vector<ZeroCrossingPair>& pairs,
                                              const ThresholdPolicy& policy) {
    if (pairs.empty()) return {};
    std::vector<double> scores;
    scores.reserve(pairs.size());
    for (const ZeroCrossingPair& p : pairs) scores.push_back(p.score);

    double threshold;
    if (policy.kind == ThresholdPolicy::Kind::Quartile) {
        threshold = interpolated_quantile(scores, policy.value);
    } else {
        double mean = 0.0;
        for (double s : scores) mean += s;
        mean /= static_cast<double>(scores.size());
        double var = 0.0;
        for (double s : scores) var += (s - mean) * (s - mean);
        var /= static_cast<double>(scores.size());   // population variance
        threshold = mean + policy.value * std::sqrt(var);
    }

    std::vector<ZeroCrossingPair> strong;
    for (const ZeroCrossingPair& p : pairs) {
        if (p.score > threshold) strong.push_back(p);
    }
    return strong;
}

EdgeNodeConfiguration edge_node_configuration(const std::vector<ZeroCrossingPair>& strong,
                                              std::size_t n) {
    EdgeNodeConfiguration config;
    config.bits.assign(n, 0);
    for (const ZeroCrossingPair& p : strong) {
        if (p.i >= n || p.j >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "configuration: pair (" + std::to_string(p.i) + "," +
                            std::to_string(p.j) + ") outside node range");
        }
        config.bits[p.i] = 1;
        config.bits[p.j] = 1;
    }
    return config;
}

EdgeNodeConfiguration run_glog(const WeightedGraph& g, const Laplacian& L,
                               const std::vector<double>& f, const GlogOptions& opts,
                               const ThresholdPolicy& policy) {
    GlogSignal s = glog_filter(L, f, opts);
    std::vector<ZeroCrossingPair> pairs = find_zero_crossing_pairs(g, s);
    std::vector<ZeroCrossingPair> strong = threshold_pairs(pairs, policy);
    return edge_node_configuration(strong, g.node_count());
}

} // namespace glg
