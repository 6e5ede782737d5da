#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tts/dynamics.hpp"
#include "tts/graph.hpp"
#include "tts/schedule.hpp"

namespace tts {

namespace detail {

// Adjacency as bitmasks for the small-instance oracles (n <= 24).
inline std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); v++)
        for (int u : g.neighbors(v)) adj[v] |= uint32_t(1) << u;
    return adj;
}

inline uint32_t step_mask(const std::vector<uint32_t>& adj, const std::vector<int>& tau,
                          uint32_t conf) {
    uint32_t out = 0;
    for (size_t v = 0; v < adj.size(); v++)
        if (std::popcount(adj[v] & conf) >= tau[v]) out |= uint32_t(1) << v;
    return out;
}

inline void check_cap(const Graph& g, int node_cap, const char* who) {
    if (node_cap > 24)
        throw std::invalid_argument(std::string(who) + ": node cap above 24 is not supported");
    if (g.n() > node_cap)
        throw std::invalid_argument(std::string(who) + ": n=" + std::to_string(g.n()) +
                                    " exceeds node cap " + std::to_string(node_cap));
}

inline std::vector<int> mask_to_vector(uint32_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; v++)
        if (mask & (uint32_t(1) << v)) out.push_back(v);
    return out;
}

// Group the reversed action list (targets between advances) into S_0..S_k.
inline Schedule sets_from_actions(std::vector<int>& rev_actions) {
    std::vector<std::vector<int>> rev_sets;
    std::vector<int> cur;
    for (int a : rev_actions) {
        if (a == -1) {
            rev_sets.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(a);
        }
    }
    rev_sets.push_back(cur);
    Schedule sched;
    for (auto it = rev_sets.rbegin(); it != rev_sets.rend(); ++it) {
        std::sort(it->begin(), it->end());
        sched.sets.push_back(std::move(*it));
    }
    sched.sets.push_back({});  // the goal advance contributes S_k = ∅
    return sched;
}

}  // namespace detail

struct ExactResult {
    long long size = 0;
    Schedule schedule;
};

// Minimum TTS size by 0/1-cost shortest path over configurations. States
// are the positive sets A; a cost-1 edge adds one targeted node within the
// current step, a cost-0 edge advances time (A -> step(A)). The goal fires
// on an advance edge reaching V, which encodes S_k = ∅ and Q_k = V, so the
// horizon needs no a-priori bound. Always feasible: targeting V costs n.
inline ExactResult min_tts_exact(const Graph& g, const ThresholdAssignment& t,
                                 int node_cap = 20) {
    require_valid(g, t);
    detail::check_cap(g, node_cap, "min_tts_exact");
    const int n = g.n();
    if (n == 0) return {0, Schedule{{{}}}};

    auto adj = detail::adjacency_masks(g);
    const uint32_t FULL = (uint32_t(1) << n) - 1;
    const size_t nstates = size_t(1) << n;
    constexpr int32_t INF = std::numeric_limits<int32_t>::max();

    std::vector<int32_t> dist(nstates, INF);
    std::vector<uint32_t> pred(nstates, 0);
    std::vector<int8_t> act(nstates, -2);  // -2 start sentinel, -1 advance, >=0 targeted node
    std::deque<std::pair<uint32_t, int32_t>> dq;
    dist[0] = 0;
    dq.push_back({0, 0});

    uint32_t goal_from = FULL;
    bool found = false;
    while (!dq.empty()) {
        auto [a, d] = dq.front();
        dq.pop_front();
        if (d != dist[a]) continue;  // stale entry

        uint32_t nxt = detail::step_mask(adj, t.tau, a);
        if (nxt == FULL) {
            goal_from = a;
            found = true;
            break;
        }
        if (dist[nxt] > d) {
            dist[nxt] = d;
            pred[nxt] = a;
            act[nxt] = -1;
            dq.push_front({nxt, d});
        }
        for (int v = 0; v < n; v++) {
            if (a & (uint32_t(1) << v)) continue;
            uint32_t b = a | (uint32_t(1) << v);
            if (dist[b] > d + 1) {
                dist[b] = d + 1;
                pred[b] = a;
                act[b] = int8_t(v);
                dq.push_back({b, d + 1});
            }
        }
    }
    if (!found) throw std::logic_error("min_tts_exact: search exhausted");

    std::vector<int> rev_actions;
    for (uint32_t s = goal_from; act[s] != -2; s = pred[s]) rev_actions.push_back(act[s]);
    ExactResult res{dist[goal_from], detail::sets_from_actions(rev_actions)};
    VerifyResult vr = verify_tts(g, t, res.schedule);
    if (!vr.accepted || res.schedule.size() != res.size)
        throw std::logic_error("min_tts_exact: reconstructed schedule failed verification");
    return res;
}

// Minimum disjoint TTS: the same search with the set of already-targeted
// nodes added to the state, so no node is targeted twice.
inline ExactResult min_dtts_exact(const Graph& g, const ThresholdAssignment& t,
                                  int node_cap = 12) {
    require_valid(g, t);
    detail::check_cap(g, node_cap, "min_dtts_exact");
    const int n = g.n();
    if (n == 0) return {0, Schedule{{{}}}};

    auto adj = detail::adjacency_masks(g);
    const uint32_t FULL = (uint32_t(1) << n) - 1;
    auto key = [n](uint32_t a, uint32_t used) { return (uint64_t(used) << n) | a; };

    struct Entry {
        int32_t dist;
        uint64_t pred;
        int8_t act;
    };
    std::unordered_map<uint64_t, Entry> st;
    std::deque<std::pair<uint64_t, int32_t>> dq;
    st[key(0, 0)] = {0, 0, -2};
    dq.push_back({key(0, 0), 0});

    uint64_t goal_from = 0;
    bool found = false;
    while (!dq.empty()) {
        auto [k, d] = dq.front();
        dq.pop_front();
        if (d != st.at(k).dist) continue;
        uint32_t a = uint32_t(k) & FULL;
        uint32_t used = uint32_t(k >> n);

        uint32_t nxt = detail::step_mask(adj, t.tau, a);
        if (nxt == FULL) {
            goal_from = k;
            found = true;
            break;
        }
        uint64_t kn = key(nxt, used);
        auto it = st.find(kn);
        if (it == st.end() || it->second.dist > d) {
            st[kn] = {d, k, -1};
            dq.push_front({kn, d});
        }
        for (int v = 0; v < n; v++) {
            uint32_t bit = uint32_t(1) << v;
            if ((a & bit) || (used & bit)) continue;
            uint64_t kb = key(a | bit, used | bit);
            auto jt = st.find(kb);
            if (jt == st.end() || jt->second.dist > d + 1) {
                st[kb] = {d + 1, k, int8_t(v)};
                dq.push_back({kb, d + 1});
            }
        }
    }
    if (!found) throw std::logic_error("min_dtts_exact: search exhausted");

    std::vector<int> rev_actions;
    for (uint64_t s = goal_from; st.at(s).act != -2; s = st.at(s).pred)
        rev_actions.push_back(st.at(s).act);
    ExactResult res{st.at(goal_from).dist, detail::sets_from_actions(rev_actions)};
    VerifyResult vr = verify_tts(g, t, res.schedule);
    if (!vr.accepted || !is_disjoint_schedule(res.schedule) || res.schedule.size() != res.size)
        throw std::logic_error("min_dtts_exact: reconstructed schedule failed verification");
    return res;
}

struct ExactTsResult {
    long long size = 0;
    std::vector<int> set;
};

// Minimum TS by subset enumeration in ascending cardinality (Gosper's hack
// walks the c-subsets of the n-bit universe), so the first hit is optimal.
inline ExactTsResult min_ts_exact(const Graph& g, const ThresholdAssignment& t, Model model,
                                  int node_cap = 20) {
    require_valid(g, t);
    detail::check_cap(g, node_cap, "min_ts_exact");
    const int n = g.n();
    if (n == 0) return {0, {}};

    auto adj = detail::adjacency_masks(g);
    const uint32_t FULL = (uint32_t(1) << n) - 1;
    const int max_orbit = default_max_steps(g);

    auto reaches = [&](uint32_t s) {
        if (model == Model::Progressive) {
            uint32_t cur = s;
            for (int i = 0; i <= n; i++) {
                uint32_t nxt = detail::step_mask(adj, t.tau, cur) | cur;
                if (nxt == cur) break;
                cur = nxt;
            }
            return cur == FULL;
        }
        // non-progressive: the orbit ends in a cycle of length 1 or 2, so a
        // repeat against the two previous configurations detects it
        uint32_t prev2 = ~s, prev1 = ~s, cur = s;
        for (int i = 0; i <= max_orbit; i++) {
            if (cur == FULL) return true;
            if (i >= 2 && cur == prev2) return false;
            prev2 = prev1;
            prev1 = cur;
            cur = detail::step_mask(adj, t.tau, cur);
        }
        throw std::logic_error("min_ts_exact: orbit did not enter a short cycle");
    };

    if (reaches(0)) return {0, {}};
    for (int c = 1; c <= n; c++) {
        uint32_t s = (uint32_t(1) << c) - 1;
        while (true) {
            if (reaches(s)) return {c, detail::mask_to_vector(s, n)};
            uint32_t low = s & (0 - s);
            uint32_t ripple = s + low;
            if (ripple > FULL) break;
            s = (((ripple ^ s) >> 2) / low) | ripple;
            if (s > FULL) break;
        }
    }
    throw std::logic_error("min_ts_exact: V itself must be a TS");  // tau <= d guarantees it
}

}  // namespace tts
