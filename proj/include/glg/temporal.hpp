#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "glg/glog.hpp"

namespace glg {

struct EdgeNodeProbability {
    std::vector<double> p_e;   // per node, exact count/m
    std::size_t m;             // slices used
};

struct EntropyDiagram {
    std::vector<double> entropy;            // per slice
    std::vector<std::string> slice_labels;
    std::vector<int> cluster_labels;        // empty when clustering was not run
};

struct ClusterResult {
    std::vector<int> labels;                 // length m, values in [0, k)
    std::size_t k;
    double silhouette;
    std::vector<std::vector<double>> centroids;   // k vectors of length n
};

EdgeNodeProbability edge_node_probability(
    const std::vector<EdgeNodeConfiguration>& configs);

double observed_probability(const EdgeNodeConfiguration& config,
                            const EdgeNodeProbability& p, std::size_t node);

// Natural-log entropy of one slice with the 0*log(0) := 0 convention.
double slice_entropy(const EdgeNodeConfiguration& config, const EdgeNodeProbability& p);

EntropyDiagram entropy_diagram(const std::vector<EdgeNodeConfiguration>& configs,
                               const EdgeNodeProbability& p);

// Seeded k-means (k-means++ init, 20 restarts, 300-iteration cap, squared
// Euclidean on the raw 0/1 vectors). Labels are canonicalized by order of
// first appearance, so results are reproducible across runs and platforms.
ClusterResult cluster_configurations(const std::vector<EdgeNodeConfiguration>& configs,
                                     std::size_t k, std::uint64_t seed);

// Mean silhouette over all points (Euclidean distances, singleton clusters
// score 0); exposed for tests.
double silhouette_of(const std::vector<std::vector<double>>& points,
                     const std::vector<int>& labels, std::size_t k);

// Evaluates every k in [k_lo, k_hi] and returns the silhouette maximizer
// (smallest k on ties).
std::pair<std::size_t, ClusterResult> select_k_by_silhouette(
    const std::vector<EdgeNodeConfiguration>& configs, std::size_t k_lo,
    std::size_t k_hi, std::uint64_t seed);

// total / max(total) + p_e; when max(total) = 0 the normalized term is zero.
std::vector<double> enhance_signal(const std::vector<double>& total,
                                   const EdgeNodeProbability& p);

} // namespace glg
