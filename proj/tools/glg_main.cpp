#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "glg/csv.hpp"
#include "glg/error.hpp"
#include "glg/pipeline.hpp"
#include "glg/svg.hpp"
#include "glg/synth.hpp"

namespace {

using glg::Error;
using glg::ErrorCode;

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

glg::WeightedGraph graph_from_edges(const std::vector<glg::WeightedEdge>& edges) {
    std::size_t n = 0;
    for (const glg::WeightedEdge& e : edges) {
        n = std::max(n, std::max(e.src, e.dst) + 1);
    }
    return glg::build_graph(n, edges);
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::IoError, "cannot create output directory '" + dir + "'");
    }
}

glg::SignalSeries series_from_dataset(const glg::SyntheticDataset& ds) {
    glg::SignalSeries s;
    s.node_count = ds.points.size();
    s.slices = ds.signals;
    s.labels.reserve(ds.signals.size());
    for (std::size_t t = 0; t < ds.signals.size(); ++t) {
        s.labels.push_back(std::to_string(t));
    }
    return s;
}

void write_dataset(const std::string& dir, const glg::SyntheticDataset& ds) {
    ensure_dir(dir);
    std::vector<glg::PointRecord> pts;
    pts.reserve(ds.points.size());
    for (std::size_t i = 0; i < ds.points.size(); ++i) {
        pts.push_back({i, ds.points[i].x, ds.points[i].y});
    }
    glg::write_points_csv(dir + "/points.csv", pts);
    glg::write_edge_csv(dir + "/edges.csv", ds.edges);
    glg::write_signal_csv(dir + "/signals.csv", series_from_dataset(ds));
    std::string anomalies = "slice_label,direction\n";
    for (std::size_t i = 0; i < ds.anomaly_slices.size(); ++i) {
        anomalies += std::to_string(ds.anomaly_slices[i]);
        anomalies += ds.anomaly_directions[i] == glg::ShiftDirection::TopRight
                         ? ",top_right\n"
                         : ",bottom_left\n";
    }
    glg::write_text_file(dir + "/anomalies.csv", anomalies);
}

struct RunFlags {
    std::string config_path;
    double sigma = 0.0;
    std::string threshold;
    std::string mode;
    std::string k;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    std::string out;
    std::string graph;
    std::string signals;
    bool synthetic = false;
};

int cmd_run(const RunFlags& flags, const CLI::App* sub) {
    glg::PipelineConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = glg::parse_config_file(flags.config_path);
    }
    if (sub->count("--sigma")) {
        if (flags.sigma <= 0.0) {
            throw Error(ErrorCode::BadConfig, "sigma must be positive");
        }
        cfg.sigma = flags.sigma;
    }
    if (sub->count("--threshold")) {
        cfg.threshold = glg::parse_config("threshold = " + flags.threshold).threshold;
    }
    if (sub->count("--mode")) {
        cfg.mode = glg::parse_config("mode = " + flags.mode).mode;
    }
    if (sub->count("--k")) {
        cfg.k = glg::parse_config("k = " + flags.k).k;
    }
    if (sub->count("--seed")) cfg.seed = flags.seed;
    if (sub->count("--jobs")) cfg.jobs = flags.jobs;
    if (sub->count("--out")) cfg.out_dir = flags.out;
    if (sub->count("--graph")) cfg.graph_path = flags.graph;
    if (sub->count("--signals")) cfg.signals_path = flags.signals;
    if (sub->count("--synthetic")) cfg.synthetic = true;

    glg::SignalSeries series;
    std::vector<glg::WeightedEdge> edges;
    if (cfg.synthetic) {
        glg::SyntheticDataset ds = glg::generate_synthetic(cfg.seed);
        edges = ds.edges;
        series = series_from_dataset(ds);
    } else {
        if (cfg.graph_path.empty() || cfg.signals_path.empty()) {
            throw Error(ErrorCode::BadConfig,
                        "run needs --synthetic or both --graph and --signals");
        }
        edges = glg::read_edge_csv(cfg.graph_path);
        std::size_t n = 0;
        for (const glg::WeightedEdge& e : edges) {
            n = std::max(n, std::max(e.src, e.dst) + 1);
        }
        series = glg::read_signal_csv(cfg.signals_path, n);
    }
    glg::WeightedGraph g = graph_from_edges(edges);

    glg::PipelineResult res = glg::run_pipeline(g, series, cfg);
    glg::PipelineConfig resolved = glg::resolve_config(cfg, g.node_count());
    glg::write_artifacts(cfg.out_dir, resolved, res);

    std::cout << "nodes " << g.node_count() << ", edges " << g.edges().size()
              << ", slices " << series.slices.size() << "\n";
    std::cout << "mode " << (res.resolved_mode == glg::FilterMode::Exact
                                 ? std::string("exact")
                                 : "cheb:" + std::to_string(res.resolved_order))
              << ", k " << res.clusters.k << ", silhouette "
              << glg::format_double(res.clusters.silhouette) << "\n";
    std::cout << "filter time " << glg::format_double(res.seconds_filter)
              << " s, total time " << glg::format_double(res.seconds_total)
              << " s\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"GLoG boundary detection and entropy analytics for graph signals"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic dataset to disk");
    std::uint64_t gen_seed = 0;
    std::string gen_out = "out";
    glg::SyntheticParams params;
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "output directory");
    gen->add_option("--nodes", params.nodes, "number of nodes");
    gen->add_option("--slices", params.slices, "number of time slices");
    auto* gen_anoms =
        gen->add_option("--anomalies", params.anomalies,
                        "anomalous slice count (default: scaled with --slices)");
    gen->add_option("--radius", params.radius, "circle radius");
    gen->add_option("--jitter", params.center_jitter, "center perturbation bound");
    gen->add_option("--noise", params.noise_amp, "additive noise bound");
    gen->add_option("--shift", params.shift, "anomalous shift distance");

    // run
    auto* run = app.add_subcommand("run", "Run the GLoG pipeline end to end");
    RunFlags rf;
    run->add_option("--config", rf.config_path, "key=value config file");
    run->add_option("--sigma", rf.sigma, "GLoG kernel scale");
    run->add_option("--threshold", rf.threshold, "quartile:Q or meanstd:K");
    run->add_option("--mode", rf.mode, "auto, exact or cheb:K");
    run->add_option("--k", rf.k, "cluster count N or auto:LO..HI");
    run->add_option("--seed", rf.seed, "RNG seed (clustering + synthetic data)");
    run->add_option("--jobs", rf.jobs, "worker threads (0 = hardware)");
    run->add_option("--out", rf.out, "output directory");
    run->add_option("--graph", rf.graph, "edge-list CSV (src,dst,weight)");
    run->add_option("--signals", rf.signals, "long-form signal CSV (slice,node_index,value)");
    run->add_flag("--synthetic", rf.synthetic, "use the built-in generator");

    // enhance
    auto* enh = app.add_subcommand("enhance", "Blend node totals with edge-node probability");
    std::string enh_totals, enh_pe, enh_out = "enhanced.csv";
    enh->add_option("--totals", enh_totals, "per-node totals CSV")->required();
    enh->add_option("--pe", enh_pe, "p_e.csv from a pipeline run")->required();
    enh->add_option("--out", enh_out, "output CSV path");

    // plot-entropy
    auto* plot = app.add_subcommand("plot-entropy", "Render entropy.csv as an SVG");
    std::string plot_in, plot_out = "entropy.svg";
    plot->add_option("--entropy", plot_in, "entropy.csv from a pipeline run")->required();
    plot->add_option("--out", plot_out, "output SVG path");

    try {
        app.parse(argc, argv);

        if (gen->parsed()) {
            if (!*gen_anoms) {
                // Keep the default anomaly density when only --slices moves.
                params.anomalies = static_cast<std::size_t>(
                    std::llround(static_cast<double>(params.slices) * 12.0 / 100.0));
            }
            glg::SyntheticDataset ds = glg::generate_synthetic(gen_seed, params);
            write_dataset(gen_out, ds);
            std::cout << "wrote " << ds.points.size() << " nodes, "
                      << ds.edges.size() << " edges, " << ds.signals.size()
                      << " slices to " << gen_out << "\n";
            return 0;
        }
        if (run->parsed()) {
            return cmd_run(rf, run);
        }
        if (enh->parsed()) {
            std::vector<double> totals = glg::read_vector_csv(enh_totals);
            glg::EdgeNodeProbability p;
            p.p_e = glg::read_vector_csv(enh_pe);
            p.m = 0;
            std::vector<double> enhanced = glg::enhance_signal(totals, p);
            glg::write_vector_csv(enh_out, "node_index,enhanced_value", enhanced);
            std::cout << "wrote " << enhanced.size() << " rows to " << enh_out << "\n";
            return 0;
        }
        if (plot->parsed()) {
            std::vector<double> entropy;
            std::vector<int> clusters;
            std::vector<std::string> labels;
            std::string text = glg::read_text_file(plot_in);
            std::size_t pos = 0;
            bool header = true;
            while (pos < text.size()) {
                std::size_t nl = text.find('\n', pos);
                std::string line =
                    text.substr(pos, nl == std::string::npos ? nl : nl - pos);
                pos = nl == std::string::npos ? text.size() : nl + 1;
                if (!line.empty() && line.back() == '\r') line.pop_back();
                if (line.empty()) continue;
                if (header) {
                    header = false;
                    continue;
                }
                std::size_t c1 = line.find(',');
                std::size_t c2 = c1 == std::string::npos
                                     ? std::string::npos
                                     : line.find(',', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos) {
                    throw Error(ErrorCode::ParseError,
                                plot_in + ": expected slice_label,entropy,cluster");
                }
                labels.push_back(line.substr(0, c1));
                entropy.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
                clusters.push_back(std::stoi(line.substr(c2 + 1)));
            }
            glg::write_text_file(plot_out,
                                 glg::render_entropy_svg(entropy, clusters, labels));
            std::cout << "wrote " << plot_out << "\n";
            return 0;
        }
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E_BAD_CONFIG: " << one_line(e.what()) << "\n";
        return e.get_exit_code() != 0 ? e.get_exit_code() : 1;
    } catch (const Error& e) {
        std::cerr << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "E_INTERNAL: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 0;
}
