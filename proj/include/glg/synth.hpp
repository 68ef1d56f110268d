#pragma once

#include <cstdint>
#include <vector>

#include "glg/delaunay.hpp"
#include "glg/graph.hpp"

namespace glg {

// Knobs for the synthetic moving-circle benchmark. Defaults reproduce the
// reference dataset: 600 nodes, 100 slices, 12 anomalous shifts.
struct SyntheticParams {
    std::size_t nodes = 600;
    std::size_t slices = 100;
    std::size_t anomalies = 12;
    double radius = 0.1;          // circle radius
    double center_jitter = 0.05;  // per-slice wander of the circle center
    double noise_amp = 0.1;       // per-node additive noise
    double shift = 0.25;          // anomalous displacement along the diagonal
};

enum class ShiftDirection { TopRight, BottomLeft };

struct SyntheticDataset {
    std::vector<Point2> points;                  // in the unit square
    std::vector<WeightedEdge> edges;             // Delaunay, unit weights
    std::vector<std::vector<double>> signals;    // [slice][node]
    std::vector<std::size_t> anomaly_slices;     // sorted, even spread
    std::vector<ShiftDirection> anomaly_directions;  // parallel to anomaly_slices
    std::vector<int> truth_labels;  // per slice: 0 centered, 1 top-right, 2 bottom-left
    std::uint64_t seed = 0;
};

// Deterministic: the seed fixes every draw, so the same (seed, params) pair
// yields a bit-identical dataset. The draw order is part of the format:
// points first (x then y per node), then per slice the two center
// perturbations followed by one noise draw per node.
SyntheticDataset generate_synthetic(std::uint64_t seed,
                                    const SyntheticParams& params = {});

// Jittered-grid strip split by a vertical step, for boundary-localization
// tests. `clean` is the binary step before noise; `signal` adds uniform noise
// of amplitude `noise_amp`.
struct NoisyStepFixture {
    std::vector<Point2> points;
    std::vector<WeightedEdge> edges;  // Delaunay, unit weights
    std::vector<double> clean;
    std::vector<double> signal;
    double step_x = 0.0;  // x coordinate of the step line
};

NoisyStepFixture noisy_step_fixture(std::uint64_t seed, std::size_t cols = 9,
                                    std::size_t rows = 40,
                                    double noise_amp = 0.1);

} // namespace glg
