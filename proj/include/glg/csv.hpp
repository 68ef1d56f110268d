#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glg/graph.hpp"

namespace glg {

// Formats a double with enough digits to round-trip exactly; used by every
// writer so that identical runs produce byte-identical files.
std::string format_double(double v);

struct PointRecord {
    std::size_t node_index;
    double x;
    double y;
};

struct SignalSeries {
    std::size_t node_count;
    std::vector<std::vector<double>> slices;   // slices[t][node]
    std::vector<std::string> labels;           // per-slice label (slice id as text)
};

// Edge lists: header "src,dst,weight"; the weight column may be omitted and
// defaults to 1.0.
std::vector<WeightedEdge> read_edge_csv(const std::string& path);
void write_edge_csv(const std::string& path, const std::vector<WeightedEdge>& edges);

// Long-form signals: header "slice,node_index,value".
SignalSeries read_signal_csv(const std::string& path, std::size_t node_count);
void write_signal_csv(const std::string& path, const SignalSeries& series);

// Points: header "node_index,x,y".
std::vector<PointRecord> read_points_csv(const std::string& path);
void write_points_csv(const std::string& path, const std::vector<PointRecord>& pts);

// Single-column vector with a caller-chosen header, one row per node.
std::vector<double> read_vector_csv(const std::string& path);
void write_vector_csv(const std::string& path, const std::string& header,
                      const std::vector<double>& values);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace glg
