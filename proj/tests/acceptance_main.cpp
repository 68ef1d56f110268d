// Release acceptance gates. Each criterion prints indented diagnostics while
// it runs and exactly one PASS/FAIL verdict line; the process exit status is
// the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glg/csv.hpp"
#include "glg/glog.hpp"
#include "glg/graph.hpp"
#include "glg/kernels.hpp"
#include "glg/pipeline.hpp"
#include "glg/rng.hpp"
#include "glg/spectral.hpp"
#include "glg/synth.hpp"
#include "glg/temporal.hpp"

using namespace glg;

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void detail(const std::string& line) { std::printf("         %s\n", line.c_str()); }

std::string fmt(const char* format, ...) {
    va_list args;
    va_start(args, format);
    char buf[512];
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return std::string(buf);
}

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += b[i] * b[i];
    }
    return std::sqrt(num) / std::sqrt(den);
}

std::vector<double> random_signal(std::size_t n, Rng& rng) {
    std::vector<double> f(n);
    for (double& x : f) x = rng.uniform(-1.0, 1.0);
    return f;
}

// Spanning tree plus extra random edges; optional per-node degree cap.
WeightedGraph random_connected(std::size_t n, Rng& rng, bool unit_weights,
                               std::size_t extra_tries,
                               std::size_t max_degree = SIZE_MAX) {
    std::vector<WeightedEdge> edges;
    std::vector<std::size_t> deg(n, 0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
    }
    auto weight = [&] { return unit_weights ? 1.0 : 0.5 + 1.5 * rng.uniform01(); };
    std::set<std::pair<std::size_t, std::size_t>> seen;
    auto add = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        edges.push_back({a, b, weight()});
        seen.insert({a, b});
        ++deg[a];
        ++deg[b];
    };
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j;
        do {
            j = perm[rng.next_below(i)];
        } while (deg[j] >= max_degree);
        add(perm[i], j);
    }
    for (std::size_t t = 0; t < extra_tries; ++t) {
        std::size_t a = rng.next_below(n), b = rng.next_below(n);
        if (a == b) continue;
        if (deg[a] >= max_degree || deg[b] >= max_degree) continue;
        auto key = std::minmax(a, b);
        if (seen.count({key.first, key.second})) continue;
        add(a, b);
    }
    return build_graph(n, edges);
}

double comb2(double x) { return x * (x - 1.0) / 2.0; }

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
    std::map<std::pair<int, int>, double> cells;
    std::map<int, double> rows, cols;
    for (std::size_t i = 0; i < a.size(); ++i) {
        cells[{a[i], b[i]}] += 1.0;
        rows[a[i]] += 1.0;
        cols[b[i]] += 1.0;
    }
    double sum_cells = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [key, c] : cells) sum_cells += comb2(c);
    for (const auto& [key, c] : rows) sum_rows += comb2(c);
    for (const auto& [key, c] : cols) sum_cols += comb2(c);
    double total = comb2(static_cast<double>(a.size()));
    double expected = sum_rows * sum_cols / total;
    double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return sum_cells == expected ? 1.0 : 0.0;
    return (sum_cells - expected) / (maximum - expected);
}

// Shared synthetic analysis at the release operating point (sigma 0.5,
// quartile 0.8, exact filtering); computed once per seed.
struct SeedRun {
    SyntheticDataset data;
    std::vector<EdgeNodeConfiguration> configs;
    EntropyDiagram diagram;
    double seconds = 0.0;
};

const SeedRun& seed_run(std::uint64_t seed) {
    static std::map<std::uint64_t, SeedRun> cache;
    auto it = cache.find(seed);
    if (it != cache.end()) return it->second;

    SeedRun run;
    double t0 = now_seconds();
    run.data = generate_synthetic(seed);
    WeightedGraph g = build_graph(run.data.points.size(), run.data.edges);
    Laplacian L = build_laplacian(g);
    SpectralBasis basis = eigendecompose(L);
    GlogOptions opts;
    opts.sigma = 0.5;
    opts.mode = FilterMode::Exact;
    opts.basis = &basis;
    ThresholdPolicy policy = ThresholdPolicy::quartile(0.8);
    for (std::size_t t = 0; t < run.data.signals.size(); ++t) {
        EdgeNodeConfiguration c = run_glog(g, L, run.data.signals[t], opts, policy);
        c.slice_label = std::to_string(t);
        run.configs.push_back(std::move(c));
    }
    EdgeNodeProbability p = edge_node_probability(run.configs);
    run.diagram = entropy_diagram(run.configs, p);
    run.seconds = now_seconds() - t0;
    return cache.emplace(seed, std::move(run)).first->second;
}

// --- criteria ---------------------------------------------------------------

bool synthetic_anomaly_recovery() {
    bool ok = true;
    for (std::uint64_t seed : {0, 1, 2}) {
        const SeedRun& run = seed_run(seed);
        std::vector<std::size_t> order(run.diagram.entropy.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return run.diagram.entropy[a] > run.diagram.entropy[b];
        });
        std::set<std::size_t> top(order.begin(),
                                  order.begin() + run.data.anomaly_slices.size());
        std::set<std::size_t> truth(run.data.anomaly_slices.begin(),
                                    run.data.anomaly_slices.end());
        bool match = top == truth;
        bool in_time = run.seconds < 30.0;
        detail(fmt("seed %llu: top-12 slices %s ground truth, %.2f s (budget 30 s)",
                   static_cast<unsigned long long>(seed),
                   match ? "match" : "differ from", run.seconds));
        ok = ok && match && in_time;
    }
    return ok;
}

bool synthetic_cluster_recovery() {
    bool ok = true;
    for (std::uint64_t seed : {0, 1, 2}) {
        const SeedRun& run = seed_run(seed);
        ClusterResult three = cluster_configurations(run.configs, 3, seed);
        double ari = adjusted_rand_index(three.labels, run.data.truth_labels);
        auto [k, best] = select_k_by_silhouette(run.configs, 2, 6, seed);
        detail(fmt("seed %llu: k=3 ARI %.3f (need >= 0.9), silhouette pick k=%zu "
                   "(need 3)",
                   static_cast<unsigned long long>(seed), ari, k));
        ok = ok && ari >= 0.9 && k == 3;
    }
    return ok;
}

bool spectral_correctness() {
    Rng rng(101);
    double worst_rt = 0.0, worst_parseval = 0.0;
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t n = 8 + rng.next_below(193);
        WeightedGraph g = random_connected(n, rng, false, n / 2);
        SpectralBasis basis = eigendecompose(build_laplacian(g));
        std::vector<double> f = random_signal(n, rng);
        std::vector<double> coeffs = gft(basis, f);
        std::vector<double> back = igft(basis, coeffs);
        worst_rt = std::max(worst_rt, rel_l2(back, f));
        double ef = norm2(f), ec = norm2(coeffs);
        worst_parseval =
            std::max(worst_parseval, std::abs(ec * ec - ef * ef) / (ef * ef));
    }
    WeightedGraph p3 = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
    SpectralBasis basis = eigendecompose(build_laplacian(p3));
    double expect[3] = {0.0, 1.0, 3.0};
    double worst_p3 = 0.0;
    for (std::size_t l = 0; l < 3; ++l) {
        worst_p3 = std::max(worst_p3, std::abs(basis.eigenvalues()[l] - expect[l]));
    }
    detail(fmt("20 graphs (n <= 200): worst round-trip %.2e, worst Parseval %.2e "
               "(limit 1e-10)",
               worst_rt, worst_parseval));
    detail(fmt("P3 eigenvalues vs {0,1,3}: worst gap %.2e (limit 1e-8)", worst_p3));
    return worst_rt <= 1e-10 && worst_parseval <= 1e-10 && worst_p3 <= 1e-8;
}

bool chebyshev_fidelity() {
    Rng rng(202);
    bool ok = true;
    double worst50 = 0.0;
    int ordered = 0;
    for (int rep = 0; rep < 10; ++rep) {
        std::size_t n = 50 + rng.next_below(451);
        WeightedGraph g = random_connected(n, rng, true, n / 2, 6);
        Laplacian L = build_laplacian(g);
        SpectralBasis basis = eigendecompose(L);
        double lam = estimate_lambda_max(L);
        std::vector<double> f = random_signal(n, rng);
        std::map<std::size_t, double> err;
        for (std::size_t order : {20, 50, 80}) {
            double worst = 0.0;
            for (double sigma : {1.0, 2.0, 3.0}) {
                for (int which = 0; which < 2; ++which) {
                    SpectralKernel h = which == 0 ? gaussian_kernel(sigma)
                                                 : glog_kernel(sigma);
                    std::vector<double> exact = apply_filter_exact(basis, h, f);
                    std::vector<double> approx =
                        apply_filter_chebyshev(L, h, f, order, lam);
                    worst = std::max(worst, rel_l2(approx, exact));
                }
            }
            err[order] = worst;
        }
        worst50 = std::max(worst50, err[50]);
        if (err[80] <= err[20]) ++ordered;
        ok = ok && err[50] <= 1e-3 && err[80] <= err[20];
    }
    detail(fmt("10 graphs (n in [50,500], degree <= 6): worst K=50 error %.2e "
               "(limit 1e-3)",
               worst50));
    detail(fmt("K=80 error <= K=20 error on %d/10 graphs", ordered));
    return ok;
}

bool scale_invariance() {
    Rng rng(303);
    WeightedGraph g = random_connected(40, rng, false, 20);
    Laplacian L = build_laplacian(g);
    SpectralBasis basis = eigendecompose(L);
    GlogOptions opts;
    opts.sigma = 1.0;
    opts.mode = FilterMode::Exact;
    opts.basis = &basis;
    ThresholdPolicy policy = ThresholdPolicy::quartile(0.75);
    int equal = 0, total = 0;
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> f = random_signal(40, rng);
        EdgeNodeConfiguration base = run_glog(g, L, f, opts, policy);
        for (double alpha : {0.1, 2.0, 1000.0}) {
            std::vector<double> scaled(f);
            for (double& x : scaled) x *= alpha;
            EdgeNodeConfiguration other = run_glog(g, L, scaled, opts, policy);
            ++total;
            if (other.bits == base.bits) ++equal;
        }
    }
    detail(fmt("configurations identical for alpha in {0.1, 2, 1000}: %d/%d",
               equal, total));
    return equal == total;
}

bool grid_equivalence() {
    const std::size_t side = 32;
    std::vector<WeightedEdge> edges;
    auto id = [&](std::size_t r, std::size_t c) { return r * side + c; };
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            if (c + 1 < side) edges.push_back({id(r, c), id(r, c + 1), 1.0});
            if (r + 1 < side) edges.push_back({id(r, c), id(r + 1, c), 1.0});
        }
    }
    WeightedGraph g = build_graph(side * side, edges);
    Laplacian L = build_laplacian(g);
    SpectralBasis basis = eigendecompose(L);
    std::vector<double> f(side * side);
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) f[id(r, c)] = c <= 15 ? 1.0 : 0.0;
    }
    GlogOptions opts;
    opts.sigma = 2.0;
    opts.mode = FilterMode::Exact;
    opts.basis = &basis;
    GlogSignal sig = glog_filter(L, f, opts);

    std::vector<ZeroCrossingPair> pairs = find_zero_crossing_pairs(g, sig);
    std::vector<ZeroCrossingPair> strong =
        threshold_pairs(pairs, ThresholdPolicy::mean_std(1.0));
    std::set<std::pair<std::size_t, std::size_t>> got, expect;
    for (const ZeroCrossingPair& p : strong) got.insert({p.i, p.j});
    for (std::size_t r = 0; r < side; ++r) expect.insert({id(r, 15), id(r, 16)});
    bool pairs_ok = got == expect;

    double mirror = 0.0, column = 0.0;
    for (std::size_t c = 0; c < side; ++c) {
        double lo = sig.values[id(0, c)], hi = lo;
        for (std::size_t r = 0; r < side; ++r) {
            double v = sig.values[id(r, c)];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            mirror = std::max(mirror, std::abs(v + sig.values[id(r, side - 1 - c)]));
        }
        column = std::max(column, hi - lo);
    }
    detail(fmt("retained pairs %s the 32 step-crossing edges (|got| = %zu)",
               pairs_ok ? "are exactly" : "differ from", got.size()));
    detail(fmt("mirror antisymmetry residual %.2e, column-constancy residual %.2e "
               "(limit 1e-8)",
               mirror, column));
    return pairs_ok && mirror <= 1e-8 && column <= 1e-8;
}

bool entropy_identities() {
    bool ok = true;

    std::size_t n = 6;
    EdgeNodeProbability half;
    half.p_e.assign(n, 0.5);
    half.m = 2;
    EdgeNodeConfiguration any;
    any.bits = {1, 0, 1, 1, 0, 0};
    double gap_half =
        std::abs(slice_entropy(any, half) - 0.5 * static_cast<double>(n) * std::log(2.0));
    ok = ok && gap_half <= 1e-10;

    EdgeNodeProbability certain;
    certain.p_e = {0.0, 1.0, 1.0};
    certain.m = 4;
    EdgeNodeConfiguration agree;
    agree.bits = {0, 1, 1};
    double gap_zero = std::abs(slice_entropy(agree, certain));
    ok = ok && gap_zero <= 1e-10;

    EdgeNodeProbability two;
    two.p_e = {0.25, 0.75};
    two.m = 4;
    EdgeNodeConfiguration both;
    both.bits = {1, 1};
    double gap_two = std::abs(slice_entropy(both, two) - 0.5623351446188083);
    ok = ok && gap_two <= 1e-10;
    detail(fmt("closed forms: uniform %.2e, certain %.2e, two-node %.2e "
               "(limit 1e-10)",
               gap_half, gap_zero, gap_two));

    Rng rng(707);
    int monotone = 0;
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t m = 2 + rng.next_below(10);
        EdgeNodeProbability p;
        p.p_e.resize(m);
        for (double& v : p.p_e) {
            do {
                v = rng.uniform01();
            } while (std::abs(v - 0.5) < 1e-3 || v < 1e-3 || v > 1.0 - 1e-3);
        }
        p.m = 7;
        EdgeNodeConfiguration likely;
        likely.bits.resize(m);
        for (auto& b : likely.bits) b = rng.next_below(2) ? 1 : 0;
        std::size_t tau = rng.next_below(m);
        likely.bits[tau] = p.p_e[tau] > 0.5 ? 1 : 0;
        EdgeNodeConfiguration unlikely = likely;
        unlikely.bits[tau] ^= 1;
        if (slice_entropy(unlikely, p) > slice_entropy(likely, p)) ++monotone;
    }
    detail(fmt("single-bit perturbation raises entropy on %d/100 instances",
               monotone));
    return ok && monotone == 100;
}

bool threshold_monotonicity() {
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        NoisyStepFixture fx = noisy_step_fixture(seed);
        WeightedGraph g = build_graph(fx.points.size(), fx.edges);
        Laplacian L = build_laplacian(g);
        SpectralBasis basis = eigendecompose(L);
        GlogOptions opts;
        opts.sigma = 1.0;
        opts.mode = FilterMode::Exact;
        opts.basis = &basis;
        EdgeNodeConfiguration loose =
            run_glog(g, L, fx.signal, opts, ThresholdPolicy::mean_std(1.0));
        EdgeNodeConfiguration tight =
            run_glog(g, L, fx.signal, opts, ThresholdPolicy::mean_std(2.0));
        bool subset = true;
        std::size_t n_loose = 0, n_tight = 0;
        for (std::size_t i = 0; i < loose.bits.size(); ++i) {
            n_loose += loose.bits[i];
            n_tight += tight.bits[i];
            if (tight.bits[i] && !loose.bits[i]) subset = false;
        }
        detail(fmt("seed %llu: |mu+2std| = %zu %s |mu+std| = %zu",
                   static_cast<unsigned long long>(seed), n_tight,
                   subset ? "subset of" : "NOT subset of", n_loose));
        ok = ok && subset && n_loose > 0;
    }
    return ok;
}

bool runtime_sanity() {
    Rng rng(909);
    const std::size_t n = 4694;
    const std::size_t target_edges = 6350;
    std::vector<WeightedEdge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
    }
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = perm[rng.next_below(i)];
        auto key = std::minmax(perm[i], j);
        edges.push_back({key.first, key.second, 1.0});
        seen.insert({key.first, key.second});
    }
    while (edges.size() < target_edges) {
        std::size_t a = rng.next_below(n), b = rng.next_below(n);
        if (a == b) continue;
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) continue;
        edges.push_back({key.first, key.second, 1.0});
    }
    WeightedGraph g = build_graph(n, edges);

    SignalSeries series;
    series.node_count = n;
    for (std::size_t t = 0; t < 336; ++t) {
        series.slices.push_back(random_signal(n, rng));
        series.labels.push_back(std::to_string(t));
    }

    PipelineConfig cfg;
    cfg.mode.kind = ModeRequest::Kind::Chebyshev;
    cfg.mode.chebyshev_order = 50;
    cfg.k.automatic = false;
    cfg.k.fixed_k = 3;
    cfg.seed = 909;
    double t0 = now_seconds();
    PipelineResult res = run_pipeline(g, series, cfg);
    double wall = now_seconds() - t0;

    detail(fmt("graph: %zu nodes, %zu edges, %zu slices", n, edges.size(),
               series.slices.size()));
    detail("stage                seconds");
    detail(fmt("filter (Chebyshev)  %8.2f", res.seconds_filter));
    detail(fmt("entropy+clustering  %8.2f", res.seconds_total - res.seconds_filter));
    detail(fmt("pipeline total      %8.2f", res.seconds_total));
    detail(fmt("wall clock          %8.2f  (budget 60 s)", wall));
    return wall < 60.0 && res.resolved_mode == FilterMode::Chebyshev;
}

bool determinism() {
    const SeedRun& run = seed_run(0);
    WeightedGraph g = build_graph(run.data.points.size(), run.data.edges);
    SignalSeries series;
    series.node_count = run.data.points.size();
    for (std::size_t t = 0; t < run.data.signals.size(); ++t) {
        series.slices.push_back(run.data.signals[t]);
        series.labels.push_back(std::to_string(t));
    }
    PipelineConfig cfg;
    cfg.sigma = 0.5;
    cfg.threshold = ThresholdPolicy::quartile(0.8);
    cfg.mode.kind = ModeRequest::Kind::Exact;
    cfg.k.automatic = false;
    cfg.k.fixed_k = 3;
    cfg.seed = 0;
    cfg.synthetic = true;
    PipelineConfig resolved = resolve_config(cfg, g.node_count());

    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "glg_acceptance_determinism";
    fs::remove_all(base);
    const char* names[] = {"config_resolved.txt", "edge_nodes.csv", "p_e.csv",
                           "entropy.csv",         "clusters.csv",   "entropy.svg"};
    std::map<std::string, std::string> first;
    bool identical = true;
    for (int pass = 0; pass < 2; ++pass) {
        PipelineResult res = run_pipeline(g, series, cfg);
        fs::path dir = base / (pass == 0 ? "a" : "b");
        write_artifacts(dir.string(), resolved, res);
        for (const char* name : names) {
            std::string bytes = read_text_file((dir / name).string());
            if (pass == 0) {
                first[name] = bytes;
            } else if (first[name] != bytes) {
                identical = false;
                detail(fmt("%s differs between runs", name));
            }
        }
    }
    fs::remove_all(base);
    if (identical) detail("two runs: all 6 artifacts byte-identical");
    return identical;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<bool()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"synthetic-anomaly-recovery", synthetic_anomaly_recovery},
        {"synthetic-cluster-recovery", synthetic_cluster_recovery},
        {"spectral-correctness", spectral_correctness},
        {"chebyshev-fidelity", chebyshev_fidelity},
        {"scale-invariance", scale_invariance},
        {"grid-equivalence", grid_equivalence},
        {"entropy-identities", entropy_identities},
        {"threshold-monotonicity", threshold_monotonicity},
        {"runtime-sanity", runtime_sanity},
        {"determinism", determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        bool pass = false;
        try {
            pass = c.fn();
        } catch (const std::exception& e) {
            detail(std::string("unexpected error: ") + e.what());
        }
        std::printf("%s - %s\n", pass ? "PASS" : "FAIL", c.name);
        std::fflush(stdout);
        if (!pass) ++failures;
    }
    return failures;
}
