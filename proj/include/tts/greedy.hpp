#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "tts/graph.hpp"
#include "tts/schedule.hpp"

namespace tts {

namespace detail {

// Processing order: ascending degree, ties broken by ascending id.
inline std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    return order;
}

}  // namespace detail

// Greedy TTS of shape (S_0, S_1, ∅). Nodes are processed in ascending
// degree; a neighbor u is blocked when its unselected count has reached
// d(u) - tau(u), i.e. one more unselected neighbor would keep u from
// activating in step 1. A blocked neighbor with larger degree is deferred
// to S_1 instead (its threshold is then treated as 0 for later blocked
// tests; verification always runs against the caller's tau).
inline Schedule tts_greedy(const Graph& g, const ThresholdAssignment& t) {
    require_valid(g, t);
    const int n = g.n();
    std::vector<int> tau_work = t.tau;
    std::vector<int> unselected(n, 0);
    std::vector<char> in_s0(n, 0), in_s1(n, 0);

    for (int v : detail::degree_order(g)) {
        std::vector<int> blocked;
        for (int u : g.neighbors(v))
            if (unselected[u] == g.degree(u) - tau_work[u]) blocked.push_back(u);

        if (blocked.empty()) {
            for (int u : g.neighbors(v)) unselected[u]++;
        } else if (blocked.size() > 1) {
            in_s0[v] = 1;
        } else {
            int w = blocked[0];
            if (g.degree(w) > g.degree(v)) {
                for (int u : g.neighbors(v)) unselected[u]++;
                in_s1[w] = 1;
                tau_work[w] = 0;
            } else {
                in_s0[v] = 1;
            }
        }
    }

    Schedule sched;
    sched.sets.assign(3, {});
    for (int v = 0; v < n; v++) {
        if (in_s0[v]) sched.sets[0].push_back(v);
        if (in_s1[v]) sched.sets[1].push_back(v);
    }
    return sched;
}

// The classic TS greedy the TTS variant extends: any blocked neighbor puts
// the node into S. The result makes every node positive in one step of the
// non-progressive model: step(S) = V.
inline std::vector<int> ts_greedy(const Graph& g, const ThresholdAssignment& t) {
    require_valid(g, t);
    const int n = g.n();
    std::vector<int> unselected(n, 0);
    std::vector<char> in_s(n, 0);

    for (int v : detail::degree_order(g)) {
        bool blocked = false;
        for (int u : g.neighbors(v))
            if (unselected[u] == g.degree(u) - t.tau[u]) {
                blocked = true;
                break;
            }
        if (blocked) {
            in_s[v] = 1;
        } else {
            for (int u : g.neighbors(v)) unselected[u]++;
        }
    }

    std::vector<int> s;
    for (int v = 0; v < n; v++)
        if (in_s[v]) s.push_back(v);
    return s;
}

}  // namespace tts
