#include "glg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "glg/error.hpp"

namespace glg {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NegativeWeight: return "E_NEGATIVE_WEIGHT";
        case ErrorCode::SelfLoop: return "E_SELF_LOOP";
        case ErrorCode::IndexOutOfRange: return "E_INDEX_OUT_OF_RANGE";
        case ErrorCode::DuplicateEdge: return "E_DUPLICATE_EDGE";
        case ErrorCode::Disconnected: return "E_DISCONNECTED";
        case ErrorCode::DimensionMismatch: return "E_DIMENSION_MISMATCH";
        case ErrorCode::NonPositiveSigma: return "E_NON_POSITIVE_SIGMA";
        case ErrorCode::TooLargeForExactMode: return "E_TOO_LARGE_FOR_EXACT_MODE";
        case ErrorCode::NumericalFailure: return "E_NUMERICAL_FAILURE";
        case ErrorCode::NoConvergence: return "E_NO_CONVERGENCE";
        case ErrorCode::EmptySeries: return "E_EMPTY_SERIES";
        case ErrorCode::BadK: return "E_BAD_K";
        case ErrorCode::DegenerateData: return "E_DEGENERATE_DATA";
        case ErrorCode::DegenerateInput: return "E_DEGENERATE_INPUT";
        case ErrorCode::DuplicatePoints: return "E_DUPLICATE_POINTS";
        case ErrorCode::ParseError: return "E_PARSE_ERROR";
        case ErrorCode::IoError: return "E_IO_ERROR";
        case ErrorCode::BadConfig: return "E_BAD_CONFIG";
    }
    return "E_UNKNOWN";
}

WeightedGraph::WeightedGraph(std::size_t n, const std::vector<WeightedEdge>& edges)
    : n_(n) {
    edges_.reserve(edges.size());
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const WeightedEdge& e : edges) {
        if (e.src >= n_ || e.dst >= n_) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "graph: edge (" + std::to_string(e.src) + "," +
                            std::to_string(e.dst) + ") outside node range 0.." +
                            std::to_string(n_ == 0 ? 0 : n_ - 1));
        }
        if (e.src == e.dst) {
            throw Error(ErrorCode::SelfLoop,
                        "graph: self-loop at node " + std::to_string(e.src));
        }
        if (e.weight < 0.0 || !std::isfinite(e.weight)) {
            throw Error(ErrorCode::NegativeWeight,
                        "graph: weight " + std::to_string(e.weight) + " on edge (" +
                            std::to_string(e.src) + "," + std::to_string(e.dst) + ")");
        }
        std::size_t a = std::min(e.src, e.dst);
        std::size_t b = std::max(e.src, e.dst);
        if (!seen.insert({a, b}).second) {
            throw Error(ErrorCode::DuplicateEdge,
                        "graph: duplicate edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
        }
        edges_.push_back({a, b, e.weight});
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const WeightedEdge& x, const WeightedEdge& y) {
                  return x.src != y.src ? x.src < y.src : x.dst < y.dst;
              });

    adj_.assign(n_, {});
    degree_.assign(n_, 0.0);
    for (const WeightedEdge& e : edges_) {
        adj_[e.src].push_back({e.dst, e.weight});
        adj_[e.dst].push_back({e.src, e.weight});
    }
    for (std::size_t i = 0; i < n_; ++i) {
        std::sort(adj_[i].begin(), adj_[i].end(),
                  [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
        double d = 0.0;
        for (const Neighbor& nb : adj_[i]) d += nb.weight;
        degree_[i] = d;
    }
}

WeightedGraph build_graph(std::size_t n, const std::vector<WeightedEdge>& edges) {
    return WeightedGraph(n, edges);
}

Laplacian::Laplacian(const WeightedGraph& g) : n_(g.node_count()), degree_(g.degrees()) {
    row_start_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        row_start_[i + 1] = row_start_[i] + g.neighbors(i).size() + 1;
    }
    col_.resize(row_start_[n_]);
    val_.resize(row_start_[n_]);
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t at = row_start_[i];
        bool diag_done = false;
        for (const WeightedGraph::Neighbor& nb : g.neighbors(i)) {
            if (!diag_done && nb.node > i) {
                col_[at] = i;
                val_[at] = degree_[i];
                ++at;
                diag_done = true;
            }
            col_[at] = nb.node;
            val_[at] = -nb.weight;
            ++at;
        }
        if (!diag_done) {
            col_[at] = i;
            val_[at] = degree_[i];
            ++at;
        }
    }
}

Laplacian build_laplacian(const WeightedGraph& g) { return Laplacian(g); }

void Laplacian::multiply(const double* x, double* y) const {
    for (std::size_t i = 0; i < n_; ++i) {
        double acc = 0.0;
        for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
            acc += val_[k] * x[col_[k]];
        }
        y[i] = acc;
    }
}

std::vector<double> Laplacian::multiply(const std::vector<double>& x) const {
    std::vector<double> y(n_);
    multiply(x.data(), y.data());
    return y;
}

double Laplacian::entry(std::size_t i, std::size_t j) const {
    for (std::size_t k = row_start_[i]; k < row_start_[i + 1]; ++k) {
        if (col_[k] == j) return val_[k];
    }
    return 0.0;
}

bool is_connected(const WeightedGraph& g) {
    std::size_t n = g.node_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const WeightedGraph::Neighbor& nb : g.neighbors(v)) {
            if (nb.weight > 0.0 && !seen[nb.node]) {
                seen[nb.node] = 1;
                ++reached;
                stack.push_back(nb.node);
            }
        }
    }
    return reached == n;
}

} // namespace glg
