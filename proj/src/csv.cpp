#include "glg/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "glg/error.hpp"

namespace glg {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, const std::string& path, std::size_t line_no) {
    const char* b = s.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(b, &end);
    if (end == b || *end != '\0' || errno == ERANGE) {
        throw Error(ErrorCode::ParseError,
                    path + ":" + std::to_string(line_no) + ": bad number '" + s + "'");
    }
    return v;
}

std::size_t parse_index(const std::string& s, const std::string& path,
                        std::size_t line_no) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError,
                    path + ":" + std::to_string(line_no) + ": bad index '" + s + "'");
    }
    return static_cast<std::size_t>(std::strtoull(s.c_str(), nullptr, 10));
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

} // namespace

std::string format_double(double v) {
    // Shortest decimal form that parses back to the same bits.
    char buf[40];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

std::vector<WeightedEdge> read_edge_csv(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, path + ": empty edge file");
    }
    std::vector<std::string> header = split_line(lines[0]);
    bool has_weight;
    if (header.size() == 3 && header[0] == "src" && header[1] == "dst" &&
        header[2] == "weight") {
        has_weight = true;
    } else if (header.size() == 2 && header[0] == "src" && header[1] == "dst") {
        has_weight = false;
    } else {
        throw Error(ErrorCode::ParseError,
                    path + ": expected header 'src,dst[,weight]', got '" + lines[0] + "'");
    }
    std::vector<WeightedEdge> edges;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        std::vector<std::string> cells = split_line(lines[ln]);
        if (cells.size() != header.size()) {
            throw Error(ErrorCode::ParseError,
                        path + ":" + std::to_string(ln + 1) + ": expected " +
                            std::to_string(header.size()) + " columns");
        }
        WeightedEdge e;
        e.src = parse_index(cells[0], path, ln + 1);
        e.dst = parse_index(cells[1], path, ln + 1);
        e.weight = has_weight ? parse_double(cells[2], path, ln + 1) : 1.0;
        edges.push_back(e);
    }
    return edges;
}

void write_edge_csv(const std::string& path, const std::vector<WeightedEdge>& edges) {
    std::ostringstream out;
    out << "src,dst,weight\n";
    for (const WeightedEdge& e : edges) {
        out << e.src << ',' << e.dst << ',' << format_double(e.weight) << '\n';
    }
    write_text_file(path, out.str());
}

SignalSeries read_signal_csv(const std::string& path, std::size_t node_count) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || split_line(lines[0]) !=
            std::vector<std::string>{"slice", "node_index", "value"}) {
        throw Error(ErrorCode::ParseError,
                    path + ": expected header 'slice,node_index,value'");
    }
    SignalSeries series;
    series.node_count = node_count;
    std::size_t max_slice = 0;
    bool any = false;
    struct Row {
        std::size_t slice, node;
        double value;
    };
    std::vector<Row> rows;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        std::vector<std::string> cells = split_line(lines[ln]);
        if (cells.size() != 3) {
            throw Error(ErrorCode::ParseError,
                        path + ":" + std::to_string(ln + 1) + ": expected 3 columns");
        }
        Row r;
        r.slice = parse_index(cells[0], path, ln + 1);
        r.node = parse_index(cells[1], path, ln + 1);
        r.value = parse_double(cells[2], path, ln + 1);
        if (r.node >= node_count) {
            throw Error(ErrorCode::IndexOutOfRange,
                        path + ":" + std::to_string(ln + 1) + ": node " +
                            std::to_string(r.node) + " >= node count " +
                            std::to_string(node_count));
        }
        max_slice = std::max(max_slice, r.slice);
        any = true;
        rows.push_back(r);
    }
    if (!any) {
        throw Error(ErrorCode::EmptySeries, path + ": no signal rows");
    }
    series.slices.assign(max_slice + 1, std::vector<double>(node_count, 0.0));
    for (const Row& r : rows) series.slices[r.slice][r.node] = r.value;
    for (std::size_t t = 0; t <= max_slice; ++t) series.labels.push_back(std::to_string(t));
    return series;
}

void write_signal_csv(const std::string& path, const SignalSeries& series) {
    std::ostringstream out;
    out << "slice,node_index,value\n";
    for (std::size_t t = 0; t < series.slices.size(); ++t) {
        for (std::size_t i = 0; i < series.slices[t].size(); ++i) {
            out << t << ',' << i << ',' << format_double(series.slices[t][i]) << '\n';
        }
    }
    write_text_file(path, out.str());
}

std::vector<PointRecord> read_points_csv(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty() || split_line(lines[0]) !=
            std::vector<std::string>{"node_index", "x", "y"}) {
        throw Error(ErrorCode::ParseError, path + ": expected header 'node_index,x,y'");
    }
    std::vector<PointRecord> pts;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        std::vector<std::string> cells = split_line(lines[ln]);
        if (cells.size() != 3) {
            throw Error(ErrorCode::ParseError,
                        path + ":" + std::to_string(ln + 1) + ": expected 3 columns");
        }
        PointRecord p;
        p.node_index = parse_index(cells[0], path, ln + 1);
        p.x = parse_double(cells[1], path, ln + 1);
        p.y = parse_double(cells[2], path, ln + 1);
        pts.push_back(p);
    }
    return pts;
}

void write_points_csv(const std::string& path, const std::vector<PointRecord>& pts) {
    std::ostringstream out;
    out << "node_index,x,y\n";
    for (const PointRecord& p : pts) {
        out << p.node_index << ',' << format_double(p.x) << ',' << format_double(p.y)
            << '\n';
    }
    write_text_file(path, out.str());
}

std::vector<double> read_vector_csv(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    if (lines.empty()) {
        throw Error(ErrorCode::ParseError, path + ": empty file");
    }
    std::vector<double> values;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        if (lines[ln].empty()) continue;
        std::vector<std::string> cells = split_line(lines[ln]);
        values.push_back(parse_double(cells.back(), path, ln + 1));
    }
    return values;
}

void write_vector_csv(const std::string& path, const std::string& header,
                      const std::vector<double>& values) {
    std::ostringstream out;
    out << header << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << i << ',' << format_double(values[i]) << '\n';
    }
    write_text_file(path, out.str());
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for '" + path + "'");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace glg
