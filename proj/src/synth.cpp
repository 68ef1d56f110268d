#include "glg/synth.hpp"

#include <cmath>

#include "glg/error.hpp"
#include "glg/rng.hpp"

namespace glg {

namespace {

void check_params(const SyntheticParams& p) {
    if (p.nodes < 3) {
        throw Error(ErrorCode::BadConfig, "synthetic dataset needs >= 3 nodes");
    }
    if (p.slices < 1) {
        throw Error(ErrorCode::BadConfig, "synthetic dataset needs >= 1 slice");
    }
    if (p.anomalies > p.slices) {
        throw Error(ErrorCode::BadConfig,
                    "anomaly count cannot exceed slice count");
    }
    if (p.radius <= 0.0) {
        throw Error(ErrorCode::BadConfig, "circle radius must be positive");
    }
    if (p.center_jitter < 0.0 || p.noise_amp < 0.0 || p.shift < 0.0) {
        throw Error(ErrorCode::BadConfig,
                    "jitter, noise and shift must be non-negative");
    }
}

std::vector<WeightedEdge> unit_edges(
    const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<WeightedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [i, j] : pairs) edges.push_back({i, j, 1.0});
    return edges;
}

} // namespace

SyntheticDataset generate_synthetic(std::uint64_t seed,
                                    const SyntheticParams& params) {
    check_params(params);
    SyntheticDataset ds;
    ds.seed = seed;
    Rng rng(seed);

    ds.points.reserve(params.nodes);
    for (std::size_t i = 0; i < params.nodes; ++i) {
        double x = rng.uniform01();
        double y = rng.uniform01();
        ds.points.push_back({x, y});
    }
    ds.edges = unit_edges(delaunay_triangulate(ds.points));

    // Anomalous slices sit at evenly spread indices, alternating direction.
    for (std::size_t i = 0; i < params.anomalies; ++i) {
        double pos = (static_cast<double>(i) + 0.5) *
                     static_cast<double>(params.slices) /
                     static_cast<double>(params.anomalies);
        ds.anomaly_slices.push_back(static_cast<std::size_t>(std::floor(pos)));
        ds.anomaly_directions.push_back(i % 2 == 0 ? ShiftDirection::TopRight
                                                   : ShiftDirection::BottomLeft);
    }
    ds.truth_labels.assign(params.slices, 0);
    for (std::size_t i = 0; i < ds.anomaly_slices.size(); ++i) {
        ds.truth_labels[ds.anomaly_slices[i]] =
            ds.anomaly_directions[i] == ShiftDirection::TopRight ? 1 : 2;
    }

    const double r2 = params.radius * params.radius;
    const double diag = params.shift / std::sqrt(2.0);
    ds.signals.assign(params.slices, std::vector<double>(params.nodes, 0.0));
    for (std::size_t t = 0; t < params.slices; ++t) {
        double cx = 0.5 + rng.uniform(-params.center_jitter, params.center_jitter);
        double cy = 0.5 + rng.uniform(-params.center_jitter, params.center_jitter);
        if (ds.truth_labels[t] == 1) {
            cx += diag;
            cy += diag;
        } else if (ds.truth_labels[t] == 2) {
            cx -= diag;
            cy -= diag;
        }
        std::vector<double>& slice = ds.signals[t];
        for (std::size_t i = 0; i < params.nodes; ++i) {
            double dx = ds.points[i].x - cx;
            double dy = ds.points[i].y - cy;
            double clean = (dx * dx + dy * dy < r2) ? 1.0 : 0.0;
            slice[i] = clean + rng.uniform(-params.noise_amp, params.noise_amp);
        }
    }
    return ds;
}

NoisyStepFixture noisy_step_fixture(std::uint64_t seed, std::size_t cols,
                                    std::size_t rows, double noise_amp) {
    if (cols < 2 || rows < 2) {
        throw Error(ErrorCode::BadConfig, "step fixture needs a 2x2 grid or larger");
    }
    if (noise_amp < 0.0) {
        throw Error(ErrorCode::BadConfig, "noise amplitude must be non-negative");
    }
    NoisyStepFixture fx;
    Rng rng(seed);
    const double h = 1.0 / static_cast<double>(rows);
    const double jitter = 0.3 * h;
    fx.points.reserve(cols * rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            double x = (static_cast<double>(c) + 0.5) * h + rng.uniform(-jitter, jitter);
            double y = (static_cast<double>(r) + 0.5) * h + rng.uniform(-jitter, jitter);
            fx.points.push_back({x, y});
        }
    }
    fx.edges = unit_edges(delaunay_triangulate(fx.points));
    fx.step_x = static_cast<double>(cols) / 2.0 * h;
    fx.clean.reserve(fx.points.size());
    for (const Point2& p : fx.points) {
        fx.clean.push_back(p.x < fx.step_x ? 1.0 : 0.0);
    }
    fx.signal.reserve(fx.points.size());
    for (double c : fx.clean) {
        fx.signal.push_back(c + rng.uniform(-noise_amp, noise_amp));
    }
    return fx;
}

} // namespace glg
