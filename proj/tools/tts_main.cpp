// Command-line front end: graph generation, simulation, schedule
// verification, the greedy and exact solvers, bounds, the paper
// constructions, ILP export, and the experiment harness.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "tts/bounds.hpp"
#include "tts/exact.hpp"
#include "tts/experiments.hpp"
#include "tts/generators.hpp"
#include "tts/greedy.hpp"
#include "tts/ilp.hpp"
#include "tts/io.hpp"
#include "tts/schedule.hpp"
#include "tts/transforms.hpp"
#include "tts/tree.hpp"

namespace {

using namespace tts;

struct Instance {
    LabeledGraph lg;
    ThresholdAssignment tau;
};

Instance load_instance(const std::string& graph_path, const std::string& rule) {
    Instance inst;
    inst.lg = read_edge_list_file(graph_path);
    if (rule.rfind("file:", 0) == 0) {
        std::ifstream f(rule.substr(5));
        if (!f) throw std::runtime_error("cannot open threshold file: " + rule.substr(5));
        inst.tau = read_thresholds(f, inst.lg);
    } else {
        inst.tau = thresholds_from_rule(inst.lg.graph, rule);
    }
    require_valid(inst.lg.graph, inst.tau);
    return inst;
}

std::unique_ptr<std::ofstream> open_out(const std::string& path, std::ostream*& out) {
    if (path.empty()) {
        out = &std::cout;
        return nullptr;
    }
    auto f = std::make_unique<std::ofstream>(path);
    if (!*f) throw std::runtime_error("cannot open output file: " + path);
    out = f.get();
    return f;
}

std::vector<int> parse_init(const Instance& inst, std::string spec) {
    for (char& c : spec)
        if (c == ',') c = ' ';
    std::istringstream ss(spec);
    std::vector<int> out;
    std::string label;
    while (ss >> label) out.push_back(inst.lg.require_id(label));
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"minimum timed target sets in the non-progressive threshold model"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    std::string gen_type = "star", gen_out;
    int gen_n = 10, gen_a = 2, gen_b = 4, gen_kappa = 3, gen_mattach = 4;
    double gen_p = 0.5;
    uint64_t gen_seed = 1;
    gen->add_option("--type", gen_type,
                    "star|kbipartite|cycle|path|tower|ba|er|random-tree")->required();
    gen->add_option("--n", gen_n, "node count");
    gen->add_option("--a", gen_a, "left side (kbipartite)");
    gen->add_option("--b", gen_b, "right side (kbipartite)");
    gen->add_option("--kappa", gen_kappa, "tower layer count");
    gen->add_option("--m-attach", gen_mattach, "BA attachment count");
    gen->add_option("--p", gen_p, "ER edge probability");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->callback([&]() {
        Graph g;
        std::ostringstream header;
        header << "gen " << gen_type;
        if (gen_type == "star") {
            g = gen_star(gen_n);
            header << " n=" << gen_n;
        } else if (gen_type == "kbipartite") {
            g = gen_complete_bipartite(gen_a, gen_b);
            header << " a=" << gen_a << " b=" << gen_b;
        } else if (gen_type == "cycle") {
            g = gen_cycle(gen_n);
            header << " n=" << gen_n;
        } else if (gen_type == "path") {
            g = gen_path(gen_n);
            header << " n=" << gen_n;
        } else if (gen_type == "tower") {
            g = gen_tower(gen_kappa).graph;
            header << " kappa=" << gen_kappa;
        } else if (gen_type == "ba") {
            g = gen_ba(gen_n, gen_mattach, gen_seed);
            header << " n=" << gen_n << " m-attach=" << gen_mattach << " seed=" << gen_seed;
        } else if (gen_type == "er") {
            g = gen_er(gen_n, gen_p, gen_seed);
            header << " n=" << gen_n << " p=" << gen_p << " seed=" << gen_seed;
        } else if (gen_type == "random-tree") {
            g = gen_random_tree(gen_n, gen_seed);
            header << " n=" << gen_n << " seed=" << gen_seed;
        } else {
            throw CLI::ValidationError("--type", "unknown generator " + gen_type);
        }
        std::ostream* out;
        auto guard = open_out(gen_out, out);
        write_edge_list(*out, g, header.str());
    });

    // common instance options, reused per subcommand
    std::string graph_path, rule = "strict";
    auto add_instance_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "edge-list file")->required();
        cmd->add_option("--rule", rule, "strict|simple|file:<path>");
    };

    // ---- simulate ----
    auto* sim = app.add_subcommand("simulate", "run the non-progressive dynamics");
    std::string sim_init;
    int sim_max_steps = -1;
    bool sim_bits = false, sim_progressive = false;
    add_instance_opts(sim);
    sim->add_option("--init", sim_init, "initially positive labels (space/comma separated)");
    sim->add_option("--max-steps", sim_max_steps, "step cap (default 4m+2n+4)");
    sim->add_flag("--bits", sim_bits, "print the full bit-string per step");
    sim->add_flag("--progressive", sim_progressive, "progressive model instead");
    sim->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        const Graph& g = inst.lg.graph;
        NodeSet conf(g.n());
        for (int v : parse_init(inst, sim_init)) conf.set(v);
        auto print_step = [&](int i, const NodeSet& c) {
            std::cout << i << " " << c.count();
            if (sim_bits) {
                std::cout << " ";
                for (int v = 0; v < g.n(); v++) std::cout << (c.test(v) ? '1' : '0');
            }
            std::cout << "\n";
        };
        if (sim_progressive) {
            int cap = sim_max_steps < 0 ? g.n() + 1 : sim_max_steps;
            print_step(0, conf);
            for (int i = 1; i <= cap; i++) {
                NodeSet nxt = step(g, inst.tau, conf, Model::Progressive);
                if (nxt == conf) break;
                conf = nxt;
                print_step(i, conf);
            }
            return;
        }
        OrbitResult orbit = run_to_limit(g, inst.tau, conf, sim_max_steps, true);
        for (size_t i = 0; i < orbit.trace.size(); i++) print_step((int)i, orbit.trace[i]);
        std::cout << "transient=" << orbit.transient_length
                  << " cycle=" << orbit.cycle_length
                  << " saw_all_positive=" << (orbit.saw_all_positive ? 1 : 0) << "\n";
    });

    // ---- verify ----
    auto* ver = app.add_subcommand("verify", "check a schedule file against Definition-style "
                                             "acceptance");
    std::string ver_sched;
    add_instance_opts(ver);
    ver->add_option("schedule", ver_sched, "schedule file (`i: labels` lines)")->required();
    ver->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        std::ifstream f(ver_sched);
        if (!f) throw std::runtime_error("cannot open schedule file: " + ver_sched);
        Schedule sched = read_schedule(f, inst.lg);
        VerifyResult vr = verify_tts(inst.lg.graph, inst.tau, sched);
        if (!vr.accepted)
            throw std::invalid_argument(std::string("schedule rejected: ") +
                                        reject_reason_name(vr.reason) + " at index " +
                                        std::to_string(vr.failing_index));
        std::cout << "TTS size=" << sched.size() << "\n";
    });

    // ---- greedy ----
    auto* gr = app.add_subcommand("greedy", "greedy TTS / TS heuristics");
    std::string gr_mode = "tts", gr_out;
    add_instance_opts(gr);
    gr->add_option("--mode", gr_mode, "tts|ts");
    gr->add_option("--out", gr_out, "output file (default stdout)");
    gr->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        const Graph& g = inst.lg.graph;
        std::ostream* out;
        auto guard = open_out(gr_out, out);
        if (gr_mode == "tts") {
            Schedule sched = tts_greedy(g, inst.tau);
            if (!verify_tts(g, inst.tau, sched).accepted)
                throw std::logic_error("greedy schedule failed verification");
            write_schedule(*out, sched, &inst.lg.labels);
            *out << "size=" << sched.size() << "\n";
        } else if (gr_mode == "ts") {
            std::vector<int> s = ts_greedy(g, inst.tau);
            NodeSet conf(g.n());
            for (int v : s) conf.set(v);
            if (!step(g, inst.tau, conf).all())
                throw std::logic_error("greedy TS failed verification");
            *out << "0:";
            for (int v : s) *out << " " << inst.lg.labels[v];
            *out << "\nsize=" << s.size() << "\n";
        } else {
            throw CLI::ValidationError("--mode", "expected tts or ts");
        }
    });

    // ---- exact ----
    auto* ex = app.add_subcommand("exact", "small-instance exact oracles");
    std::string ex_what = "tts", ex_model = "non-progressive", ex_solver;
    int ex_cap = 20, ex_kmax = 8;
    bool ex_via_ilp = false;
    add_instance_opts(ex);
    ex->add_option("--what", ex_what, "tts|dtts|ts");
    ex->add_option("--model", ex_model, "non-progressive|progressive (for --what ts)");
    ex->add_option("--node-cap", ex_cap, "state-space cap");
    ex->add_flag("--via-ilp", ex_via_ilp, "solve through the ILP k-sweep");
    ex->add_option("--k-max", ex_kmax, "ILP horizon sweep bound");
    ex->add_option("--solver-cmd", ex_solver, "external solver command");
    ex->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        const Graph& g = inst.lg.graph;
        if (ex_via_ilp) {
            if (ex_solver.empty())
                throw std::invalid_argument("--via-ilp requires --solver-cmd");
            IlpSweepResult r = min_tts_via_ilp(g, inst.tau, ex_kmax, ex_solver);
            if (!verify_tts(g, inst.tau, r.schedule).accepted)
                throw std::logic_error("ILP schedule failed verification");
            std::cout << "size=" << r.size << "\n";
            write_schedule(std::cout, r.schedule, &inst.lg.labels);
            return;
        }
        if (ex_what == "tts" || ex_what == "dtts") {
            ExactResult r = ex_what == "tts" ? min_tts_exact(g, inst.tau, ex_cap)
                                             : min_dtts_exact(g, inst.tau, ex_cap);
            if (!verify_tts(g, inst.tau, r.schedule).accepted)
                throw std::logic_error("oracle schedule failed verification");
            std::cout << "size=" << r.size << "\n";
            write_schedule(std::cout, r.schedule, &inst.lg.labels);
        } else if (ex_what == "ts") {
            Model model = ex_model == "progressive" ? Model::Progressive
                                                    : Model::NonProgressive;
            ExactTsResult r = min_ts_exact(g, inst.tau, model, ex_cap);
            if (!verify_ts(g, inst.tau, r.set, model))
                throw std::logic_error("oracle TS failed verification");
            std::cout << "size=" << r.size << "\n0:";
            for (int v : r.set) std::cout << " " << inst.lg.labels[v];
            std::cout << "\n";
        } else {
            throw CLI::ValidationError("--what", "expected tts, dtts or ts");
        }
    });

    // ---- tree ----
    auto* tr = app.add_subcommand("tree", "exact linear-time solver for trees");
    bool tr_schedule = false;
    add_instance_opts(tr);
    tr->add_flag("--schedule", tr_schedule, "also construct and print a schedule");
    tr->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        long long size = min_tts_tree_size(inst.lg.graph, inst.tau);
        std::cout << "size=" << size << "\n";
        if (tr_schedule) {
            Schedule sched = construct_tts_tree(inst.lg.graph, inst.tau);
            if (!verify_tts(inst.lg.graph, inst.tau, sched).accepted)
                throw std::logic_error("tree schedule failed verification");
            write_schedule(std::cout, sched, &inst.lg.labels);
        }
    });

    // ---- bounds ----
    auto* bd = app.add_subcommand("bounds", "closed-form lower bounds");
    add_instance_opts(bd);
    bd->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        const Graph& g = inst.lg.graph;
        bool strict = detail::is_exact_strict_majority(g, inst.tau);
        std::cout << "strict-majority: ";
        if (strict)
            std::cout << lb_strict_majority(g, inst.tau) << "\n";
        else
            std::cout << "inapplicable\n";
        std::cout << "even: ";
        if (strict && is_even_graph(g))
            std::cout << lb_even(g, inst.tau) << "\n";
        else
            std::cout << "inapplicable\n";
        std::cout << "tree-2A: ";
        if (g.is_tree())
            std::cout << tree_lower_bound_2A(g, inst.tau) << "\n";
        else
            std::cout << "inapplicable\n";
        BoundReport best = best_lower_bound(g, inst.tau);
        std::cout << "best: " << best.value << " (" << best.which << ")\n";
    });

    // ---- transform ----
    auto* tfm = app.add_subcommand("transform", "paper constructions relating variants");
    bool tfm_cover = false, tfm_gadget = false;
    std::string tfm_out_graph, tfm_out_tau;
    add_instance_opts(tfm);
    tfm->add_flag("--double-cover", tfm_cover, "bipartite double cover");
    tfm->add_flag("--hardness-gadget", tfm_gadget, "pendant-triangle reduction gadget");
    tfm->add_option("--out-graph", tfm_out_graph, "output edge list")->required();
    tfm->add_option("--out-thresholds", tfm_out_tau, "output threshold file")->required();
    tfm->callback([&]() {
        if (tfm_cover == tfm_gadget)
            throw CLI::ValidationError("transform",
                                       "choose exactly one of --double-cover / "
                                       "--hardness-gadget");
        Instance inst = load_instance(graph_path, rule);
        Graph out_g;
        ThresholdAssignment out_t;
        std::ostringstream header;
        if (tfm_cover) {
            DoubleCover dc = bipartite_double_cover(inst.lg.graph, inst.tau);
            out_g = dc.graph;
            out_t = dc.tau;
            header << "double-cover of " << graph_path << "; x_i = i, y_i = n + i";
        } else {
            HardnessGadget hg = hardness_gadget(inst.lg.graph, inst.tau);
            out_g = hg.graph;
            out_t = hg.tau;
            header << "hardness-gadget of " << graph_path
                   << "; originals keep ids, gadget pairs appended in node order";
        }
        std::ofstream fg(tfm_out_graph);
        if (!fg) throw std::runtime_error("cannot open " + tfm_out_graph);
        write_edge_list(fg, out_g, header.str());
        std::ofstream ft(tfm_out_tau);
        if (!ft) throw std::runtime_error("cannot open " + tfm_out_tau);
        for (int v = 0; v < out_g.n(); v++) ft << v << " " << out_t.tau[v] << "\n";
    });

    // ---- ilp-export ----
    auto* ie = app.add_subcommand("ilp-export", "write the horizon-k 0/1 program as LP text");
    int ie_k = 3;
    std::string ie_out;
    add_instance_opts(ie);
    ie->add_option("--k", ie_k, "horizon")->required();
    ie->add_option("--out", ie_out, "output file (default stdout)");
    ie->callback([&]() {
        Instance inst = load_instance(graph_path, rule);
        IlpModel m = emit_ilp(inst.lg.graph, inst.tau, ie_k);
        std::ostream* out;
        auto guard = open_out(ie_out, out);
        *out << ilp_to_lp_text(m);
    });

    // ---- experiment ----
    auto* exp = app.add_subcommand("experiment", "synthetic sweeps and real-network runs");
    ExperimentConfig cfg;
    std::string exp_n = "10,15,20", exp_out, exp_real;
    std::string exp_rule = "strict";
    exp->add_option("--model", cfg.model, "ba|er");
    exp->add_option("--n", exp_n, "comma-separated node counts");
    exp->add_option("--instances", cfg.instances, "instances per n");
    exp->add_option("--seed", cfg.seed, "master seed");
    exp->add_option("--avg-degree", cfg.avg_degree, "target average degree");
    exp->add_option("--node-cap", cfg.node_cap, "oracle optima up to this n");
    exp->add_option("--solver-cmd", cfg.solver_cmd, "ILP solver for larger optima");
    exp->add_option("--k-max", cfg.ilp_k_max, "ILP horizon sweep bound");
    exp->add_option("--workers", cfg.workers, "parallel instances");
    exp->add_option("--out", exp_out, "CSV output file (default stdout)");
    exp->add_option("--real", exp_real, "run on a real edge-list file instead");
    exp->add_option("--rule", exp_rule, "threshold rule for --real");
    exp->callback([&]() {
        if (!exp_real.empty()) {
            RealNetworkReport rep = experiment_real(exp_real, exp_rule);
            std::cout << "network=" << rep.path << " nodes=" << rep.nodes
                      << " edges=" << rep.edges << " tts_greedy=" << rep.tts_greedy
                      << " ts_greedy=" << rep.ts_greedy << " improvement="
                      << std::fixed << std::setprecision(1) << rep.improvement_pct << "%\n";
            return;
        }
        cfg.n_list.clear();
        std::string item;
        std::istringstream ss(exp_n);
        while (std::getline(ss, item, ',')) cfg.n_list.push_back(std::stoi(item));
        std::vector<ExperimentRow> rows = experiment_synthetic(cfg);
        std::ostream* out;
        auto guard = open_out(exp_out, out);
        write_experiment_csv(*out, rows);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
