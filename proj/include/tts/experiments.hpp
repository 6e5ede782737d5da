#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tts/exact.hpp"
#include "tts/generators.hpp"
#include "tts/greedy.hpp"
#include "tts/ilp.hpp"
#include "tts/io.hpp"
#include "tts/rng.hpp"

namespace tts {

struct ExperimentRow {
    std::string model;
    int n = 0;
    uint64_t seed = 0;  // master seed; the per-instance stream is derived
    int instance = 0;
    long long ts_greedy = 0;
    long long tts_greedy = 0;
    std::optional<long long> ts_opt;
    std::optional<long long> tts_opt;
    std::string opt_method;
    long long wall_ms = 0;
};

struct ExperimentConfig {
    std::string model = "ba";  // "ba" or "er"
    std::vector<int> n_list{10, 15, 20};
    int instances = 10;
    uint64_t seed = 1;
    int avg_degree = 8;
    int node_cap = 20;          // oracle optima up to here
    std::string solver_cmd;     // ILP fallback for TTS-OPT when set
    int ilp_k_max = 8;
    int workers = 1;
};

inline uint64_t instance_seed(const ExperimentConfig& cfg, int n, int instance) {
    uint64_t tag = cfg.model == "er" ? 2 : 1;
    return split_seed(cfg.seed, (tag * 1000003ULL + (uint64_t)n) * 1000003ULL + instance);
}

inline Graph make_experiment_graph(const ExperimentConfig& cfg, int n, int instance) {
    uint64_t s = instance_seed(cfg, n, instance);
    if (cfg.model == "ba") {
        int m_attach = cfg.avg_degree / 2;
        return gen_ba(n, m_attach, s);
    }
    double p = n > 1 ? std::min(1.0, (double)cfg.avg_degree / (n - 1)) : 0.0;
    return gen_er(n, p, s);
}

inline ExperimentRow run_experiment_instance(const ExperimentConfig& cfg, int n, int instance) {
    auto t0 = std::chrono::steady_clock::now();
    Graph g = make_experiment_graph(cfg, n, instance);
    ThresholdAssignment tau = strict_majority(g);

    ExperimentRow row;
    row.model = cfg.model;
    row.n = n;
    row.seed = cfg.seed;
    row.instance = instance;

    std::vector<int> ts = ts_greedy(g, tau);
    NodeSet conf(g.n());
    for (int v : ts) conf.set(v);
    if (!step(g, tau, conf).all())
        throw std::logic_error("ts_greedy output does not activate V in one step");
    row.ts_greedy = (long long)ts.size();

    Schedule tts = tts_greedy(g, tau);
    if (!verify_tts(g, tau, tts).accepted)
        throw std::logic_error("tts_greedy output failed verification");
    row.tts_greedy = tts.size();

    if (n <= cfg.node_cap) {
        row.tts_opt = min_tts_exact(g, tau, cfg.node_cap).size;
        row.ts_opt = min_ts_exact(g, tau, Model::NonProgressive, cfg.node_cap).size;
        row.opt_method = "oracle";
    } else if (!cfg.solver_cmd.empty()) {
        row.tts_opt = min_tts_via_ilp(g, tau, cfg.ilp_k_max, cfg.solver_cmd).size;
        row.opt_method = "ilp";
    }

    auto t1 = std::chrono::steady_clock::now();
    row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return row;
}

// Instance-level parallel map; rows come back in deterministic order no
// matter how the workers interleave.
inline std::vector<ExperimentRow> experiment_synthetic(const ExperimentConfig& cfg) {
    std::vector<std::pair<int, int>> jobs;  // (n, instance)
    for (int n : cfg.n_list)
        for (int i = 0; i < cfg.instances; i++) jobs.push_back({n, i});

    std::vector<ExperimentRow> rows(jobs.size());
    int workers = std::max(1, cfg.workers);
    if (workers == 1) {
        for (size_t j = 0; j < jobs.size(); j++)
            rows[j] = run_experiment_instance(cfg, jobs[j].first, jobs[j].second);
        return rows;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; w++)
        pool.emplace_back([&]() {
            for (;;) {
                size_t j = next.fetch_add(1);
                if (j >= jobs.size()) return;
                rows[j] = run_experiment_instance(cfg, jobs[j].first, jobs[j].second);
            }
        });
    for (auto& th : pool) th.join();
    return rows;
}

namespace detail {

inline std::string fmt_mean(const std::vector<long long>& xs) {
    if (xs.empty()) return "";
    double mean = 0;
    for (long long x : xs) mean += (double)x;
    mean /= (double)xs.size();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << mean;
    return os.str();
}

inline std::string fmt_sd(const std::vector<long long>& xs) {
    if (xs.empty()) return "";
    double mean = 0;
    for (long long x : xs) mean += (double)x;
    mean /= (double)xs.size();
    double var = 0;
    for (long long x : xs) var += ((double)x - mean) * ((double)x - mean);
    var /= (double)xs.size();
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << std::sqrt(var);
    return os.str();
}

}  // namespace detail

// CSV: per-instance rows followed by mean/sd rows per (model, n) group.
// Byte-stable for a fixed seed apart from the wall_ms column.
inline void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "model,n,seed,instance,ts_greedy,tts_greedy,ts_opt,tts_opt,opt_method,wall_ms\n";
    auto opt_str = [](const std::optional<long long>& v) {
        return v ? std::to_string(*v) : std::string();
    };
    for (size_t i = 0; i < rows.size(); i++) {
        const auto& r = rows[i];
        out << r.model << "," << r.n << "," << r.seed << "," << r.instance << ","
            << r.ts_greedy << "," << r.tts_greedy << "," << opt_str(r.ts_opt) << ","
            << opt_str(r.tts_opt) << "," << r.opt_method << "," << r.wall_ms << "\n";

        bool group_end = i + 1 == rows.size() || rows[i + 1].model != r.model ||
                         rows[i + 1].n != r.n;
        if (!group_end) continue;
        std::vector<long long> tsg, ttsg, tso, ttso;
        for (const auto& q : rows) {
            if (q.model != r.model || q.n != r.n) continue;
            tsg.push_back(q.ts_greedy);
            ttsg.push_back(q.tts_greedy);
            if (q.ts_opt) tso.push_back(*q.ts_opt);
            if (q.tts_opt) ttso.push_back(*q.tts_opt);
        }
        using detail::fmt_mean;
        using detail::fmt_sd;
        out << r.model << "," << r.n << "," << r.seed << ",mean," << fmt_mean(tsg) << ","
            << fmt_mean(ttsg) << "," << fmt_mean(tso) << "," << fmt_mean(ttso) << ",,\n";
        out << r.model << "," << r.n << "," << r.seed << ",sd," << fmt_sd(tsg) << ","
            << fmt_sd(ttsg) << "," << fmt_sd(tso) << "," << fmt_sd(ttso) << ",,\n";
    }
}

struct RealNetworkReport {
    std::string path;
    int nodes = 0;
    long long edges = 0;
    long long tts_greedy = 0;
    long long ts_greedy = 0;
    double improvement_pct = 0.0;  // (TS - TTS) / TS
};

inline RealNetworkReport experiment_real(const std::string& path,
                                         const std::string& rule = "strict") {
    LabeledGraph lg = read_edge_list_file(path);
    if (lg.graph.n() == 0) throw std::runtime_error("empty edge list: " + path);
    ThresholdAssignment tau = thresholds_from_rule(lg.graph, rule);

    RealNetworkReport rep;
    rep.path = path;
    rep.nodes = lg.graph.n();
    rep.edges = lg.graph.m();

    std::vector<int> ts = ts_greedy(lg.graph, tau);
    NodeSet conf(lg.graph.n());
    for (int v : ts) conf.set(v);
    if (!step(lg.graph, tau, conf).all())
        throw std::logic_error("ts_greedy output does not activate V in one step");
    rep.ts_greedy = (long long)ts.size();

    Schedule tts = tts_greedy(lg.graph, tau);
    if (!verify_tts(lg.graph, tau, tts).accepted)
        throw std::logic_error("tts_greedy output failed verification");
    rep.tts_greedy = tts.size();

    rep.improvement_pct =
        rep.ts_greedy == 0 ? 0.0
                           : 100.0 * (double)(rep.ts_greedy - rep.tts_greedy) / rep.ts_greedy;
    return rep;
}

}  // namespace tts
