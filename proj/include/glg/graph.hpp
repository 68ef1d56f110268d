#pragma once

#include <cstddef>
#include <vector>

namespace glg {

struct WeightedEdge {
    std::size_t src;
    std::size_t dst;
    double weight;
};

// Undirected weighted graph with a deterministic edge order. Adjacency is
// stored CSR-style (row-major, columns sorted) so every accumulation that
// walks it is bit-reproducible.
class WeightedGraph {
public:
    WeightedGraph(std::size_t n, const std::vector<WeightedEdge>& edges);

    std::size_t node_count() const { return n_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    // Neighbors of node i as (neighbor index, weight), sorted by neighbor.
    struct Neighbor {
        std::size_t node;
        double weight;
    };
    const std::vector<Neighbor>& neighbors(std::size_t i) const { return adj_[i]; }

    double degree(std::size_t i) const { return degree_[i]; }
    const std::vector<double>& degrees() const { return degree_; }

private:
    std::size_t n_;
    std::vector<WeightedEdge> edges_;          // normalized src < dst, sorted
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<double> degree_;
};

// Sparse symmetric L = D - A in CSR form.
class Laplacian {
public:
    explicit Laplacian(const WeightedGraph& g);

    std::size_t size() const { return n_; }

    // y = L * x
    void multiply(const double* x, double* y) const;
    std::vector<double> multiply(const std::vector<double>& x) const;

    // Dense row entry lookup, used by tests and the exact eigensolver.
    double entry(std::size_t i, std::size_t j) const;

    const std::vector<double>& degrees() const { return degree_; }

private:
    std::size_t n_;
    std::vector<std::size_t> row_start_;
    std::vector<std::size_t> col_;
    std::vector<double> val_;
    std::vector<double> degree_;
};

WeightedGraph build_graph(std::size_t n, const std::vector<WeightedEdge>& edges);
Laplacian build_laplacian(const WeightedGraph& g);

// True iff every node is reachable from node 0 through positive-weight edges.
bool is_connected(const WeightedGraph& g);

} // namespace glg
