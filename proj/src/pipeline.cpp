#include "glg/pipeline.hpp"

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <optional>
#include <thread>

#include "glg/error.hpp"
#include "glg/svg.hpp"

namespace glg {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double config_double(const std::string& s, const std::string& key) {
    const char* b = s.c_str();
    char* end = nullptr;
    errno = 0;
    double v = std::strtod(b, &end);
    if (end == b || *end != '\0' || errno == ERANGE) {
        throw Error(ErrorCode::BadConfig, key + ": bad number '" + s + "'");
    }
    return v;
}

std::uint64_t config_uint(const std::string& s, const std::string& key) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::BadConfig, key + ": bad integer '" + s + "'");
    }
    return std::strtoull(s.c_str(), nullptr, 10);
}

std::string threshold_to_string(const ThresholdPolicy& p) {
    if (p.kind == ThresholdPolicy::Kind::Quartile) {
        return "quartile:" + format_double(p.value);
    }
    return "meanstd:" + format_double(p.value);
}

ThresholdPolicy threshold_from_string(const std::string& s) {
    std::size_t colon = s.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorCode::BadConfig,
                    "threshold must be quartile:Q or meanstd:K, got '" + s + "'");
    }
    std::string kind = s.substr(0, colon);
    double value = config_double(s.substr(colon + 1), "threshold");
    if (kind == "quartile") return ThresholdPolicy::quartile(value);
    if (kind == "meanstd") return ThresholdPolicy::mean_std(value);
    throw Error(ErrorCode::BadConfig, "unknown threshold policy '" + kind + "'");
}

std::string mode_to_string(const ModeRequest& m) {
    switch (m.kind) {
        case ModeRequest::Kind::Auto: return "auto";
        case ModeRequest::Kind::Exact: return "exact";
        case ModeRequest::Kind::Chebyshev:
            return "cheb:" + std::to_string(m.chebyshev_order);
    }
    return "auto";
}

ModeRequest mode_from_string(const std::string& s) {
    ModeRequest m;
    if (s == "auto") {
        m.kind = ModeRequest::Kind::Auto;
    } else if (s == "exact") {
        m.kind = ModeRequest::Kind::Exact;
    } else if (s.rfind("cheb:", 0) == 0) {
        m.kind = ModeRequest::Kind::Chebyshev;
        m.chebyshev_order =
            static_cast<std::size_t>(config_uint(s.substr(5), "mode"));
        if (m.chebyshev_order < 1) {
            throw Error(ErrorCode::BadConfig, "Chebyshev order must be >= 1");
        }
    } else {
        throw Error(ErrorCode::BadConfig,
                    "mode must be auto, exact or cheb:K, got '" + s + "'");
    }
    return m;
}

std::string k_to_string(const KSelection& k) {
    if (!k.automatic) return std::to_string(k.fixed_k);
    return "auto:" + std::to_string(k.k_lo) + ".." + std::to_string(k.k_hi);
}

KSelection k_from_string(const std::string& s) {
    KSelection k;
    if (s.rfind("auto:", 0) == 0) {
        std::string range = s.substr(5);
        std::size_t dots = range.find("..");
        if (dots == std::string::npos) {
            throw Error(ErrorCode::BadConfig,
                        "k range must look like auto:2..10, got '" + s + "'");
        }
        k.automatic = true;
        k.k_lo = static_cast<std::size_t>(config_uint(range.substr(0, dots), "k"));
        k.k_hi = static_cast<std::size_t>(config_uint(range.substr(dots + 2), "k"));
        if (k.k_lo < 2 || k.k_hi < k.k_lo) {
            throw Error(ErrorCode::BadConfig, "bad k range '" + s + "'");
        }
    } else {
        k.automatic = false;
        k.fixed_k = static_cast<std::size_t>(config_uint(s, "k"));
        if (k.fixed_k < 2) {
            throw Error(ErrorCode::BadConfig, "k must be >= 2");
        }
    }
    return k;
}

bool bool_from_string(const std::string& s, const std::string& key) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw Error(ErrorCode::BadConfig, key + ": expected true or false, got '" + s + "'");
}

} // namespace

std::string serialize_config(const PipelineConfig& cfg) {
    std::string out;
    out += "sigma = " + format_double(cfg.sigma) + "\n";
    out += "threshold = " + threshold_to_string(cfg.threshold) + "\n";
    out += "mode = " + mode_to_string(cfg.mode) + "\n";
    out += "exact_cap = " + std::to_string(cfg.exact_cap) + "\n";
    out += "k = " + k_to_string(cfg.k) + "\n";
    out += "seed = " + std::to_string(cfg.seed) + "\n";
    out += "jobs = " + std::to_string(cfg.jobs) + "\n";
    out += "synthetic = " + std::string(cfg.synthetic ? "true" : "false") + "\n";
    out += "graph = " + cfg.graph_path + "\n";
    out += "signals = " + cfg.signals_path + "\n";
    out += "out = " + cfg.out_dir + "\n";
    return out;
}

PipelineConfig parse_config(const std::string& text) {
    PipelineConfig cfg;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(ErrorCode::BadConfig, "expected key = value, got '" + line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "sigma") {
            cfg.sigma = config_double(value, key);
            if (cfg.sigma <= 0.0) {
                throw Error(ErrorCode::BadConfig, "sigma must be positive");
            }
        } else if (key == "threshold") {
            cfg.threshold = threshold_from_string(value);
        } else if (key == "mode") {
            cfg.mode = mode_from_string(value);
        } else if (key == "exact_cap") {
            cfg.exact_cap = static_cast<std::size_t>(config_uint(value, key));
        } else if (key == "k") {
            cfg.k = k_from_string(value);
        } else if (key == "seed") {
            cfg.seed = config_uint(value, key);
        } else if (key == "jobs") {
            cfg.jobs = static_cast<std::size_t>(config_uint(value, key));
        } else if (key == "synthetic") {
            cfg.synthetic = bool_from_string(value, key);
        } else if (key == "graph") {
            cfg.graph_path = value;
        } else if (key == "signals") {
            cfg.signals_path = value;
        } else if (key == "out") {
            cfg.out_dir = value;
        } else {
            throw Error(ErrorCode::BadConfig, "unknown config key '" + key + "'");
        }
    }
    return cfg;
}

PipelineConfig parse_config_file(const std::string& path) {
    return parse_config(read_text_file(path));
}

PipelineConfig resolve_config(const PipelineConfig& cfg, std::size_t n) {
    PipelineConfig rc = cfg;
    if (rc.mode.kind == ModeRequest::Kind::Auto) {
        rc.mode.kind = n <= rc.exact_cap ? ModeRequest::Kind::Exact
                                         : ModeRequest::Kind::Chebyshev;
    }
    return rc;
}

PipelineResult run_pipeline(const WeightedGraph& g, const SignalSeries& signals,
                            const PipelineConfig& cfg) {
    auto t_start = std::chrono::steady_clock::now();
    if (signals.node_count != g.node_count()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "signal series is over " + std::to_string(signals.node_count) +
                        " nodes but the graph has " + std::to_string(g.node_count()));
    }
    if (signals.slices.empty()) {
        throw Error(ErrorCode::EmptySeries, "no slices to process");
    }
    if (!is_connected(g)) {
        throw Error(ErrorCode::Disconnected, "input graph is not connected");
    }
    PipelineConfig rc = resolve_config(cfg, g.node_count());

    Laplacian L = build_laplacian(g);
    GlogOptions opts;
    opts.sigma = rc.sigma;
    std::optional<SpectralBasis> basis;
    if (rc.mode.kind == ModeRequest::Kind::Exact) {
        opts.mode = FilterMode::Exact;
        basis.emplace(eigendecompose(L, rc.exact_cap));
        opts.basis = &*basis;
    } else {
        opts.mode = FilterMode::Chebyshev;
        opts.chebyshev_order = rc.mode.chebyshev_order;
        opts.lambda_max_estimate = estimate_lambda_max(L);
    }

    const std::size_t m = signals.slices.size();
    PipelineResult res;
    res.resolved_mode = opts.mode;
    res.resolved_order = opts.chebyshev_order;
    res.configs.assign(m, EdgeNodeConfiguration{});

    auto work_one = [&](std::size_t t) {
        EdgeNodeConfiguration c =
            run_glog(g, L, signals.slices[t], opts, rc.threshold);
        c.slice_label =
            t < signals.labels.size() ? signals.labels[t] : std::to_string(t);
        res.configs[t] = std::move(c);
    };

    std::size_t jobs = rc.jobs != 0
                           ? rc.jobs
                           : std::max<std::size_t>(1, std::thread::hardware_concurrency());
    jobs = std::min(jobs, m);
    if (jobs <= 1) {
        for (std::size_t t = 0; t < m; ++t) work_one(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;
        auto worker = [&] {
            while (true) {
                std::size_t t = next.fetch_add(1);
                if (t >= m) break;
                try {
                    work_one(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    break;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    res.seconds_filter =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();

    res.p_e = edge_node_probability(res.configs);
    res.diagram = entropy_diagram(res.configs, res.p_e);

    if (rc.k.automatic) {
        // The requested range is clamped to what m slices admit.
        std::size_t hi = std::min(rc.k.k_hi, m > 0 ? m - 1 : 0);
        auto [chosen, cr] =
            select_k_by_silhouette(res.configs, rc.k.k_lo, hi, rc.seed);
        (void)chosen;
        res.clusters = std::move(cr);
    } else {
        res.clusters = cluster_configurations(res.configs, rc.k.fixed_k, rc.seed);
    }
    res.diagram.cluster_labels = res.clusters.labels;

    res.seconds_total =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
            .count();
    return res;
}

void write_artifacts(const std::string& out_dir, const PipelineConfig& resolved,
                     const PipelineResult& res) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw Error(ErrorCode::IoError,
                    "cannot create output directory '" + out_dir + "'");
    }

    write_text_file(out_dir + "/config_resolved.txt", serialize_config(resolved));

    std::string edge_nodes = "slice_label,node_index\n";
    for (const EdgeNodeConfiguration& c : res.configs) {
        for (std::size_t i = 0; i < c.bits.size(); ++i) {
            if (c.bits[i]) {
                edge_nodes += c.slice_label + "," + std::to_string(i) + "\n";
            }
        }
    }
    write_text_file(out_dir + "/edge_nodes.csv", edge_nodes);

    write_vector_csv(out_dir + "/p_e.csv", "node_index,p_e", res.p_e.p_e);

    std::string entropy = "slice_label,entropy,cluster\n";
    for (std::size_t t = 0; t < res.diagram.entropy.size(); ++t) {
        int cluster = t < res.diagram.cluster_labels.size()
                          ? res.diagram.cluster_labels[t]
                          : -1;
        entropy += res.diagram.slice_labels[t] + "," +
                   format_double(res.diagram.entropy[t]) + "," +
                   std::to_string(cluster) + "\n";
    }
    write_text_file(out_dir + "/entropy.csv", entropy);

    std::string clusters = "slice_label,cluster\n";
    for (std::size_t t = 0; t < res.clusters.labels.size(); ++t) {
        std::string label = t < res.diagram.slice_labels.size()
                                ? res.diagram.slice_labels[t]
                                : std::to_string(t);
        clusters += label + "," + std::to_string(res.clusters.labels[t]) + "\n";
    }
    write_text_file(out_dir + "/clusters.csv", clusters);

    write_text_file(out_dir + "/entropy.svg",
                    render_entropy_svg(res.diagram.entropy,
                                       res.diagram.cluster_labels,
                                       res.diagram.slice_labels));
}

} // namespace glg
