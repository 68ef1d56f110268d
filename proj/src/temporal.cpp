#include "glg/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "glg/error.hpp"
#include "glg/rng.hpp"

namespace glg {

EdgeNodeProbability edge_node_probability(
    const std::vector<EdgeNodeConfiguration>& configs) {
    if (configs.empty()) {
        throw Error(ErrorCode::EmptySeries, "edge_node_probability: no slices");
    }
    std::size_t n = configs[0].bits.size();
    std::vector<std::size_t> counts(n, 0);
    for (const EdgeNodeConfiguration& c : configs) {
        if (c.bits.size() != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "edge_node_probability: inconsistent configuration lengths");
        }
        for (std::size_t i = 0; i < n; ++i) counts[i] += c.bits[i];
    }
    EdgeNodeProbability p;
    p.m = configs.size();
    p.p_e.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.p_e[i] = static_cast<double>(counts[i]) / static_cast<double>(p.m);
    }
    return p;
}

double observed_probability(const EdgeNodeConfiguration& config,
                            const EdgeNodeProbability& p, std::size_t node) {
    if (node >= config.bits.size() || node >= p.p_e.size()) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "observed_probability: node " + std::to_string(node) +
                        " out of range");
    }
    return config.bits[node] ? p.p_e[node] : 1.0 - p.p_e[node];
}

double slice_entropy(const EdgeNodeConfiguration& config, const EdgeNodeProbability& p) {
    if (config.bits.size() != p.p_e.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "slice_entropy: configuration length " +
                        std::to_string(config.bits.size()) + " vs probability length " +
                        std::to_string(p.p_e.size()));
    }
    double e = 0.0;
    for (std::size_t i = 0; i < config.bits.size(); ++i) {
        double q = config.bits[i] ? p.p_e[i] : 1.0 - p.p_e[i];
        if (q > 0.0) e -= q * std::log(q);
    }
    return e;
}

EntropyDiagram entropy_diagram(const std::vector<EdgeNodeConfiguration>& configs,
                               const EdgeNodeProbability& p) {
    if (configs.empty()) {
        throw Error(ErrorCode::EmptySeries, "entropy_diagram: no slices");
    }
    EntropyDiagram d;
    d.entropy.reserve(configs.size());
    for (std::size_t t = 0; t < configs.size(); ++t) {
        d.entropy.push_back(slice_entropy(configs[t], p));
        d.slice_labels.push_back(configs[t].slice_label.empty()
                                     ? std::to_string(t)
                                     : configs[t].slice_label);
    }
    return d;
}

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

struct KmeansRun {
    std::vector<int> labels;
    std::vector<std::vector<double>> centers;
    double inertia;
};

KmeansRun lloyd_once(const std::vector<std::vector<double>>& pts, std::size_t k,
                     Rng& rng) {
    std::size_t m = pts.size();
    // k-means++ seeding.
    std::vector<std::size_t> chosen;
    chosen.push_back(rng.next_below(m));
    std::vector<double> d2(m);
    for (std::size_t i = 0; i < m; ++i) d2[i] = sq_dist(pts[i], pts[chosen[0]]);
    while (chosen.size() < k) {
        double total = 0.0;
        for (double d : d2) total += d;
        std::size_t pick = m;   // sentinel
        if (total > 0.0) {
            double r = rng.uniform01() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                acc += d2[i];
                if (r < acc) {
                    pick = i;
                    break;
                }
            }
            if (pick == m) pick = m - 1;   // numeric tail guard
        } else {
            // All remaining distances are zero (duplicate-heavy data): take the
            // lowest index not already chosen.
            for (std::size_t i = 0; i < m; ++i) {
                if (std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
                    pick = i;
                    break;
                }
            }
            if (pick == m) pick = 0;
        }
        chosen.push_back(pick);
        for (std::size_t i = 0; i < m; ++i) {
            d2[i] = std::min(d2[i], sq_dist(pts[i], pts[pick]));
        }
    }

    std::vector<std::vector<double>> centers;
    centers.reserve(k);
    for (std::size_t c : chosen) centers.push_back(pts[c]);

    std::vector<int> labels(m, -1);
    for (std::size_t iter = 0; iter < 300; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < m; ++i) {
            int best = 0;
            double best_d = sq_dist(pts[i], centers[0]);
            for (std::size_t c = 1; c < k; ++c) {
                double d = sq_dist(pts[i], centers[c]);
                if (d < best_d) {
                    best_d = d;
                    best = static_cast<int>(c);
                }
            }
            if (labels[i] != best) {
                labels[i] = best;
                changed = true;
            }
        }
        // Revive empty clusters with the point farthest from its center.
        std::vector<std::size_t> sizes(k, 0);
        for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
        for (std::size_t c = 0; c < k; ++c) {
            if (sizes[c] > 0) continue;
            std::size_t farthest = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < m; ++i) {
                if (sizes[static_cast<std::size_t>(labels[i])] <= 1) continue;
                double d = sq_dist(pts[i], centers[static_cast<std::size_t>(labels[i])]);
                if (d > far_d) {
                    far_d = d;
                    farthest = i;
                }
            }
            --sizes[static_cast<std::size_t>(labels[farthest])];
            labels[farthest] = static_cast<int>(c);
            ++sizes[c];
            changed = true;
        }
        if (!changed && iter > 0) break;
        for (std::size_t c = 0; c < k; ++c) {
            std::fill(centers[c].begin(), centers[c].end(), 0.0);
        }
        std::vector<std::size_t> cnt(k, 0);
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t c = static_cast<std::size_t>(labels[i]);
            ++cnt[c];
            for (std::size_t d = 0; d < pts[i].size(); ++d) centers[c][d] += pts[i][d];
        }
        for (std::size_t c = 0; c < k; ++c) {
            for (double& v : centers[c]) v /= static_cast<double>(cnt[c]);
        }
    }

    double inertia = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        inertia += sq_dist(pts[i], centers[static_cast<std::size_t>(labels[i])]);
    }
    return {std::move(labels), std::move(centers), inertia};
}

} // namespace

double silhouette_of(const std::vector<std::vector<double>>& points,
                     const std::vector<int>& labels, std::size_t k) {
    std::size_t m = points.size();
    std::vector<std::size_t> sizes(k, 0);
    for (int l : labels) ++sizes[static_cast<std::size_t>(l)];
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t own = static_cast<std::size_t>(labels[i]);
        if (sizes[own] <= 1) continue;   // singleton: s(i) = 0
        std::vector<double> sum(k, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            sum[static_cast<std::size_t>(labels[j])] +=
                std::sqrt(sq_dist(points[i], points[j]));
        }
        double a = sum[own] / static_cast<double>(sizes[own] - 1);
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < k; ++c) {
            if (c == own || sizes[c] == 0) continue;
            b = std::min(b, sum[c] / static_cast<double>(sizes[c]));
        }
        double denom = std::max(a, b);
        if (denom > 0.0) total += (b - a) / denom;
    }
    return total / static_cast<double>(m);
}

ClusterResult cluster_configurations(const std::vector<EdgeNodeConfiguration>& configs,
                                     std::size_t k, std::uint64_t seed) {
    std::size_t m = configs.size();
    if (k < 2 || k > m) {
        throw Error(ErrorCode::BadK,
                    "cluster_configurations: k=" + std::to_string(k) +
                        " outside [2, " + std::to_string(m) + "]");
    }
    std::vector<std::vector<double>> pts(m);
    for (std::size_t t = 0; t < m; ++t) {
        pts[t].assign(configs[t].bits.begin(), configs[t].bits.end());
    }
    bool all_same = true;
    for (std::size_t t = 1; t < m && all_same; ++t) {
        all_same = pts[t] == pts[0];
    }
    if (all_same) {
        throw Error(ErrorCode::DegenerateData,
                    "cluster_configurations: all configurations identical");
    }

    Rng rng(seed);
    KmeansRun best;
    best.inertia = std::numeric_limits<double>::infinity();
    for (int restart = 0; restart < 20; ++restart) {
        KmeansRun run = lloyd_once(pts, k, rng);
        if (run.inertia < best.inertia) {   // ties keep the earlier restart
            best = std::move(run);
        }
    }

    // Canonicalize labels by order of first appearance.
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int& l : best.labels) {
        if (remap[static_cast<std::size_t>(l)] < 0) {
            remap[static_cast<std::size_t>(l)] = next++;
        }
    }
    std::vector<std::vector<double>> centroids(k);
    for (std::size_t c = 0; c < k; ++c) {
        centroids[static_cast<std::size_t>(remap[c])] = std::move(best.centers[c]);
    }
    for (int& l : best.labels) l = remap[static_cast<std::size_t>(l)];

    ClusterResult result;
    result.labels = std::move(best.labels);
    result.k = k;
    result.centroids = std::move(centroids);
    result.silhouette = silhouette_of(pts, result.labels, k);
    return result;
}

std::pair<std::size_t, ClusterResult> select_k_by_silhouette(
    const std::vector<EdgeNodeConfiguration>& configs, std::size_t k_lo,
    std::size_t k_hi, std::uint64_t seed) {
    std::size_t m = configs.size();
    if (k_lo < 2 || k_hi < k_lo || k_hi > (m == 0 ? 0 : m - 1)) {
        throw Error(ErrorCode::BadK,
                    "select_k_by_silhouette: range [" + std::to_string(k_lo) + "," +
                        std::to_string(k_hi) + "] invalid for m=" + std::to_string(m));
    }
    std::size_t best_k = 0;
    ClusterResult best_result;
    double best_sil = -std::numeric_limits<double>::infinity();
    for (std::size_t k = k_lo; k <= k_hi; ++k) {
        ClusterResult r = cluster_configurations(configs, k, seed);
        if (r.silhouette > best_sil) {   // ties keep the smaller k
            best_sil = r.silhouette;
            best_k = k;
            best_result = std::move(r);
        }
    }
    return {best_k, std::move(best_result)};
}

std::vector<double> enhance_signal(const std::vector<double>& total,
                                   const EdgeNodeProbability& p) {
    if (total.size() != p.p_e.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "enhance_signal: totals length " + std::to_string(total.size()) +
                        " vs probability length " + std::to_string(p.p_e.size()));
    }
    double max_total = 0.0;
    for (double v : total) {
        if (v < 0.0) {
            throw Error(ErrorCode::BadConfig, "enhance_signal: negative total value");
        }
        max_total = std::max(max_total, v);
    }
    std::vector<double> out(total.size());
    for (std::size_t i = 0; i < total.size(); ++i) {
        out[i] = (max_total > 0.0 ? total[i] / max_total : 0.0) + p.p_e[i];
    }
    return out;
}

} // namespace glg
