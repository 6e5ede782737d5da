#pragma once

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tts/exact.hpp"
#include "tts/graph.hpp"
#include "tts/schedule.hpp"

namespace tts {

inline std::string ilp_var_x(int v, int i) {
    return "x_" + std::to_string(v) + "_" + std::to_string(i);
}
inline std::string ilp_var_y(int v, int i) {
    return "y_" + std::to_string(v) + "_" + std::to_string(i);
}

// 0/1 program for "minimum total targets over horizon k". x_{v,i} = v is
// targeted at step i, y_{v,i} = v is rule-activated at step i. Constraint C
// forces y_{v,i} = 1 when enough neighbors were positive, C' forces
// y_{v,i} = 0 otherwise. The final row y_{v,k} = 1 plus the overlap row
// x+y <= 1 encodes S_k = ∅ and Q_k = V, so an (always feasible for n >= 1,
// k >= 1) solution decodes to an accepted schedule with the same size.
struct IlpModel {
    struct Term {
        long long coef;
        std::string var;
    };
    struct Row {
        std::string name;
        std::vector<Term> terms;
        std::string op;  // ">=", "<=", "="
        long long rhs;
    };

    int n = 0;
    int k = 0;
    std::vector<std::string> objective;  // minimized, unit coefficients
    std::vector<Row> rows;
    std::vector<std::string> zero_fixings;  // Bounds section: var = 0
    std::vector<std::string> binaries;
};

inline IlpModel emit_ilp(const Graph& g, const ThresholdAssignment& t, int k) {
    require_valid(g, t);
    if (k < 0) throw std::invalid_argument("emit_ilp: k must be >= 0");
    const int n = g.n();
    IlpModel m;
    m.n = n;
    m.k = k;

    for (int i = 0; i <= k; i++)
        for (int v = 0; v < n; v++) m.objective.push_back(ilp_var_x(v, i));

    int idx = 0;
    auto name = [&]() { return "c" + std::to_string(idx++); };

    // C: (d(v)+1-tau(v)) y_{v,i} - sum_{u in N(v)} (x_{u,i-1} + y_{u,i-1}) >= 1 - tau(v)
    for (int i = 1; i <= k; i++)
        for (int v = 0; v < n; v++) {
            IlpModel::Row r;
            r.name = name();
            r.terms.push_back({g.degree(v) + 1 - t.tau[v], ilp_var_y(v, i)});
            for (int u : g.neighbors(v)) {
                r.terms.push_back({-1, ilp_var_x(u, i - 1)});
                r.terms.push_back({-1, ilp_var_y(u, i - 1)});
            }
            r.op = ">=";
            r.rhs = 1 - t.tau[v];
            m.rows.push_back(std::move(r));
        }

    // C': sum_{u in N(v)} (x_{u,i-1} + y_{u,i-1}) - tau(v) y_{v,i} >= 0
    for (int i = 1; i <= k; i++)
        for (int v = 0; v < n; v++) {
            IlpModel::Row r;
            r.name = name();
            for (int u : g.neighbors(v)) {
                r.terms.push_back({1, ilp_var_x(u, i - 1)});
                r.terms.push_back({1, ilp_var_y(u, i - 1)});
            }
            r.terms.push_back({-t.tau[v], ilp_var_y(v, i)});
            r.op = ">=";
            r.rhs = 0;
            m.rows.push_back(std::move(r));
        }

    // final step: every node rule-activated (Q_k = V and, with the overlap
    // rows, S_k = ∅)
    for (int v = 0; v < n; v++) {
        IlpModel::Row r;
        r.name = name();
        r.terms.push_back({1, ilp_var_y(v, k)});
        r.op = "=";
        r.rhs = 1;
        m.rows.push_back(std::move(r));
    }

    // overlap: x_{v,i} + y_{v,i} <= 1
    for (int i = 0; i <= k; i++)
        for (int v = 0; v < n; v++) {
            IlpModel::Row r;
            r.name = name();
            r.terms.push_back({1, ilp_var_x(v, i)});
            r.terms.push_back({1, ilp_var_y(v, i)});
            r.op = "<=";
            r.rhs = 1;
            m.rows.push_back(std::move(r));
        }

    for (int v = 0; v < n; v++) m.zero_fixings.push_back(ilp_var_y(v, 0));

    for (int i = 0; i <= k; i++)
        for (int v = 0; v < n; v++) {
            m.binaries.push_back(ilp_var_x(v, i));
            m.binaries.push_back(ilp_var_y(v, i));
        }
    return m;
}

inline std::string ilp_to_lp_text(const IlpModel& m) {
    std::ostringstream os;
    os << "Minimize\n obj:";
    if (m.objective.empty()) os << " 0 x_dummy";
    for (size_t i = 0; i < m.objective.size(); i++)
        os << (i == 0 ? " " : " + ") << m.objective[i];
    os << "\nSubject To\n";
    for (const auto& r : m.rows) {
        os << " " << r.name << ":";
        bool first = true;
        for (const auto& term : r.terms) {
            long long c = term.coef;
            if (first) {
                if (c < 0) os << " -";
                first = false;
            } else {
                os << (c < 0 ? " -" : " +");
            }
            long long a = c < 0 ? -c : c;
            if (a != 1) os << " " << a;
            os << " " << term.var;
        }
        if (r.terms.empty()) os << " 0 " << (m.binaries.empty() ? "x_dummy" : m.binaries[0]);
        os << " " << r.op << " " << r.rhs << "\n";
    }
    os << "Bounds\n";
    for (const auto& v : m.zero_fixings) os << " " << v << " = 0\n";
    os << "Binary\n";
    for (const auto& v : m.binaries) os << " " << v << "\n";
    os << "End\n";
    return os.str();
}

enum class SolveStatus { Solved, Infeasible, Unavailable };

struct SolveResult {
    SolveStatus status = SolveStatus::Unavailable;
    std::map<std::string, double> values;
    std::string message;
};

// Runs `<solver_command> <lp-file> <solution-file>`. The solution file
// holds whitespace-separated `name value` lines ('#' starts a comment); an
// infeasible model is signalled by a `# infeasible` line. A wrapper around
// scipy's MILP interface ships in tools/lp_solve.py.
inline SolveResult solve_ilp_external(const IlpModel& m, const std::string& solver_command) {
    namespace fs = std::filesystem;
    static int counter = 0;
    std::string tag = std::to_string((long long)(size_t)&counter) + "_" + std::to_string(counter++);
    fs::path lp = fs::temp_directory_path() / ("tts_ilp_" + tag + ".lp");
    fs::path sol = fs::temp_directory_path() / ("tts_ilp_" + tag + ".sol");

    {
        std::ofstream f(lp);
        if (!f) return {SolveStatus::Unavailable, {}, "cannot write LP file"};
        f << ilp_to_lp_text(m);
    }

    std::string cmd = solver_command + " " + lp.string() + " " + sol.string();
    int rc = std::system(cmd.c_str());

    SolveResult res;
    std::ifstream f(sol);
    if (rc != 0 || !f) {
        res.status = SolveStatus::Unavailable;
        res.message = "solver command failed (exit " + std::to_string(rc) + ")";
        fs::remove(lp);
        fs::remove(sol);
        return res;
    }
    std::string line;
    bool infeasible = false;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            if (line.find("infeasible") != std::string::npos) infeasible = true;
            continue;
        }
        std::istringstream ls(line);
        std::string var;
        double val;
        if (ls >> var >> val) res.values[var] = val;
    }
    fs::remove(lp);
    fs::remove(sol);
    if (infeasible) {
        res.status = SolveStatus::Infeasible;
        return res;
    }
    if (res.values.empty()) {
        res.status = SolveStatus::Unavailable;
        res.message = "no values in solution file";
        return res;
    }
    res.status = SolveStatus::Solved;
    return res;
}

// S_i = {v : x_{v,i} = 1}, reading values >= 0.5 as 1 to absorb solver
// numerics. Every variable must be present; x+y <= 1 violations are
// decoder errors.
inline Schedule schedule_from_assignment(const Graph& g,
                                         const std::map<std::string, double>& assignment,
                                         int k) {
    auto value = [&](const std::string& var) {
        auto it = assignment.find(var);
        if (it == assignment.end())
            throw std::invalid_argument("assignment is missing variable " + var);
        return it->second >= 0.5;
    };
    Schedule sched;
    for (int i = 0; i <= k; i++) {
        std::vector<int> si;
        for (int v = 0; v < g.n(); v++) {
            bool x = value(ilp_var_x(v, i));
            bool y = value(ilp_var_y(v, i));
            if (x && y)
                throw std::invalid_argument("assignment violates x+y <= 1 at node " +
                                            std::to_string(v) + " step " + std::to_string(i));
            if (x) si.push_back(v);
        }
        sched.sets.push_back(std::move(si));
    }
    return sched;
}

struct IlpSweepResult {
    long long size = 0;
    Schedule schedule;
    std::vector<std::optional<long long>> per_k;  // objective per horizon, empty = infeasible
};

// Ranges k = 0..k_max and keeps the best objective. Once feasible the
// optimum is non-increasing in k (trailing empty steps never hurt): checked
// as a sanity assertion, never used for early exit.
inline IlpSweepResult min_tts_via_ilp(const Graph& g, const ThresholdAssignment& t, int k_max,
                                      const std::string& solver_command) {
    require_valid(g, t);
    if (g.n() == 0) return {0, Schedule{{{}}}, {}};
    IlpSweepResult out;
    bool have = false;
    for (int k = 0; k <= k_max; k++) {
        IlpModel m = emit_ilp(g, t, k);
        SolveResult sr = solve_ilp_external(m, solver_command);
        if (sr.status == SolveStatus::Unavailable)
            throw std::runtime_error("ILP solver unavailable: " + sr.message);
        if (sr.status == SolveStatus::Infeasible) {
            out.per_k.push_back(std::nullopt);
            continue;
        }
        Schedule sched = schedule_from_assignment(g, sr.values, k);
        VerifyResult vr = verify_tts(g, t, sched);
        if (!vr.accepted)
            throw std::logic_error(std::string("ILP solution failed verification: ") +
                                   reject_reason_name(vr.reason));
        long long size = sched.size();
        out.per_k.push_back(size);
        if (!have || size < out.size) {
            out.size = size;
            out.schedule = sched;
            have = true;
        }
    }
    if (!have) throw std::runtime_error("ILP infeasible for every k <= " + std::to_string(k_max));
    return out;
}

}  // namespace tts
