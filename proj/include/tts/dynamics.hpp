#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tts/bitset.hpp"
#include "tts/graph.hpp"

namespace tts {

enum class Model { Progressive, NonProgressive };

// One synchronous update. Non-progressive: v is positive next step iff at
// least tau(v) of its neighbors are positive now. Progressive: same rule but
// positive nodes never revert.
inline NodeSet step(const Graph& g, const ThresholdAssignment& t, const NodeSet& conf,
                    Model model = Model::NonProgressive) {
    NodeSet out(g.n());
    for (int v = 0; v < g.n(); v++) {
        int pos = 0;
        for (int u : g.neighbors(v))
            if (conf.test(u)) pos++;
        if (pos >= t.tau[v]) out.set(v);
    }
    if (model == Model::Progressive) out |= conf;
    return out;
}

inline int default_max_steps(const Graph& g) { return (int)(4 * g.m() + 2 * g.n() + 4); }

struct OrbitResult {
    int transient_length = 0;             // steps before entering the limit cycle
    int cycle_length = 0;                 // 1 or 2 in the non-progressive model
    std::vector<NodeSet> cycle_configs;   // the repeating configurations
    bool saw_all_positive = false;
    std::vector<NodeSet> trace;           // full sequence when requested
};

// Iterate the non-progressive dynamics until a configuration repeats.
// Throws if max_steps is exhausted first (the theory guarantees an O(m)
// pre-period, so that signals a bug or a far-too-small cap).
inline OrbitResult run_to_limit(const Graph& g, const ThresholdAssignment& t, NodeSet conf,
                                int max_steps = -1, bool keep_trace = false) {
    if (max_steps < 0) max_steps = default_max_steps(g);
    if (max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");

    std::unordered_map<NodeSet, int, NodeSetHash> seen;
    std::vector<NodeSet> history;
    OrbitResult res;
    for (int i = 0; i <= max_steps; i++) {
        auto it = seen.find(conf);
        if (it != seen.end()) {
            res.transient_length = it->second;
            res.cycle_length = i - it->second;
            for (int j = it->second; j < i; j++) res.cycle_configs.push_back(history[j]);
            if (keep_trace) res.trace = std::move(history);
            return res;
        }
        seen.emplace(conf, i);
        history.push_back(conf);
        if (conf.all()) res.saw_all_positive = true;
        conf = step(g, t, conf, Model::NonProgressive);
    }
    throw std::runtime_error("run_to_limit: no repetition within max_steps");
}

// True iff A_i = V for some i, starting from A_0 = conf with no further
// targeting. Progressive runs are monotone, so the check stops at the fixed
// point; non-progressive runs stop when the orbit repeats.
inline bool reaches_all_positive(const Graph& g, const ThresholdAssignment& t,
                                 const NodeSet& conf, Model model) {
    if (conf.all()) return true;
    if (model == Model::Progressive) {
        NodeSet cur = conf;
        for (int i = 0; i < g.n() + 1; i++) {
            NodeSet nxt = step(g, t, cur, Model::Progressive);
            if (nxt == cur) return cur.all();
            cur = nxt;
        }
        return cur.all();
    }
    OrbitResult orbit = run_to_limit(g, t, conf);
    return orbit.saw_all_positive;
}

}  // namespace tts
