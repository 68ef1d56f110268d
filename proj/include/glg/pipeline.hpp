#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "glg/csv.hpp"
#include "glg/glog.hpp"
#include "glg/temporal.hpp"

namespace glg {

// Filter-mode request before resolution. Auto picks exact filtering for
// graphs within the exact-mode cap and Chebyshev beyond it; a resolved
// config always carries a concrete mode.
struct ModeRequest {
    enum class Kind { Auto, Exact, Chebyshev };
    Kind kind = Kind::Auto;
    std::size_t chebyshev_order = 50;
};

struct KSelection {
    bool automatic = true;   // silhouette sweep over [k_lo, k_hi] when true
    std::size_t fixed_k = 3;
    std::size_t k_lo = 2;
    std::size_t k_hi = 10;
};

struct PipelineConfig {
    double sigma = 3.0;
    ThresholdPolicy threshold = ThresholdPolicy::quartile(0.75);
    ModeRequest mode;
    std::size_t exact_cap = kDefaultExactModeCap;
    KSelection k;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;      // 0 = available parallelism
    bool synthetic = false;
    std::string graph_path;    // empty when synthetic
    std::string signals_path;
    std::string out_dir = "out";
};

// Plain key=value text, one key per line, stable order and canonical number
// formatting, so parse(serialize(c)) serializes back byte-identically.
std::string serialize_config(const PipelineConfig& cfg);
PipelineConfig parse_config(const std::string& text);
PipelineConfig parse_config_file(const std::string& path);

struct PipelineResult {
    std::vector<EdgeNodeConfiguration> configs;
    EdgeNodeProbability p_e;
    EntropyDiagram diagram;
    ClusterResult clusters;
    FilterMode resolved_mode = FilterMode::Exact;
    std::size_t resolved_order = 0;   // meaningful in Chebyshev mode
    double seconds_filter = 0.0;      // GLoG stage (incl. basis / lambda_max)
    double seconds_total = 0.0;
};

// Full per-slice GLoG -> probability -> entropy -> clustering pipeline.
// Slices are filtered by a worker pool (cfg.jobs threads, 0 = hardware
// parallelism); results are stored by slice index, so output never depends
// on scheduling.
PipelineResult run_pipeline(const WeightedGraph& g, const SignalSeries& signals,
                            const PipelineConfig& cfg);

// Returns cfg with mode auto-selection applied for an n-node graph.
PipelineConfig resolve_config(const PipelineConfig& cfg, std::size_t n);

// Writes config_resolved.txt, edge_nodes.csv, p_e.csv, entropy.csv,
// clusters.csv and entropy.svg under out_dir (created if missing).
void write_artifacts(const std::string& out_dir, const PipelineConfig& resolved,
                     const PipelineResult& res);

} // namespace glg
