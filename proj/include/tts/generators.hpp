#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

#include "tts/graph.hpp"
#include "tts/rng.hpp"
#include "tts/schedule.hpp"

namespace tts {

// K_{1,n-1}: node 0 is the center, 1..n-1 the leaves.
inline Graph gen_star(int n) {
    if (n < 2) throw std::invalid_argument("gen_star: need n >= 2");
    std::vector<Edge> e;
    for (int v = 1; v < n; v++) e.push_back({0, v});
    return Graph::from_edges(n, e);
}

// K_{a,b}: left side 0..a-1, right side a..a+b-1.
inline Graph gen_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("gen_complete_bipartite: sides must be >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < a; i++)
        for (int j = 0; j < b; j++) e.push_back({i, a + j});
    return Graph::from_edges(a + b, e);
}

inline Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
    std::vector<Edge> e;
    for (int v = 0; v < n; v++) e.push_back({v, (v + 1) % n});
    return Graph::from_edges(n, e);
}

inline Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("gen_path: need n >= 1");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; v++) e.push_back({v, v + 1});
    return Graph::from_edges(n, e);
}

// Layered tower: layers L_1..L_kappa with |L_i| = i, complete bipartite
// joins between consecutive layers, and two extra leaves on the L_1 node.
// Separates the minimum TS from the minimum disjoint-TTS size.
struct TowerGraph {
    Graph graph;
    std::vector<std::vector<int>> layers;  // layers[i-1] = node ids of L_i
    int leaf_a = 0, leaf_b = 1;            // the two leaves attached to L_1
};

inline TowerGraph gen_tower(int kappa) {
    if (kappa < 2) throw std::invalid_argument("gen_tower: need kappa >= 2");
    TowerGraph tw;
    tw.layers.resize(kappa);
    int next = 2;  // ids 0,1 are the leaves
    for (int i = 1; i <= kappa; i++)
        for (int j = 0; j < i; j++) tw.layers[i - 1].push_back(next++);
    std::vector<Edge> e;
    e.push_back({0, tw.layers[0][0]});
    e.push_back({1, tw.layers[0][0]});
    for (int i = 0; i + 1 < kappa; i++)
        for (int u : tw.layers[i])
            for (int v : tw.layers[i + 1]) e.push_back({u, v});
    tw.graph = Graph::from_edges(next, e);
    return tw;
}

// The disjoint TTS of size kappa + ceil(kappa/2) + 2 for the tower under
// strict majority: S_0 = L_kappa plus the lowest-id ceil(kappa/2) nodes of
// L_{kappa-1}, S_{kappa-2} = {L_1 node, one leaf}, everything else empty.
inline Schedule tower_reference_dtts(int kappa) {
    if (kappa < 3) throw std::invalid_argument("tower_reference_dtts: need kappa >= 3");
    TowerGraph tw = gen_tower(kappa);
    const Graph& g = tw.graph;
    ThresholdAssignment tau = strict_majority(g);

    Schedule sched;
    sched.sets.assign(kappa, {});
    std::vector<int> s0 = tw.layers[kappa - 1];
    int take = (kappa + 1) / 2;
    for (int j = 0; j < take; j++) s0.push_back(tw.layers[kappa - 2][j]);
    std::sort(s0.begin(), s0.end());
    sched.sets[0] = s0;
    sched.sets[kappa - 2] = {tw.leaf_a, tw.layers[0][0]};

    // horizon kappa-1 suffices per the construction; pad defensively until
    // the verifier's Q reaches V
    for (int pad = 0; pad < 4; pad++) {
        VerifyResult vr = verify_tts(g, tau, sched);
        if (vr.accepted) return sched;
        sched.sets.push_back({});
    }
    throw std::logic_error("tower_reference_dtts: construction did not verify");
}

// G(n, p): each pair independently with probability p.
inline Graph gen_er(int n, double p, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_er: need n >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_er: need 0 <= p <= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> e;
    for (int u = 0; u < n; u++)
        for (int v = u + 1; v < n; v++)
            if (rng.next_double() < p) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

// Barabási–Albert: clique seed on m_attach+1 nodes, then each new node
// attaches to m_attach distinct existing nodes sampled proportionally to
// degree (without replacement, via the repeated-endpoint list).
inline Graph gen_ba(int n, int m_attach, uint64_t seed) {
    if (m_attach < 1) throw std::invalid_argument("gen_ba: need m_attach >= 1");
    if (n < m_attach + 1) throw std::invalid_argument("gen_ba: need n >= m_attach + 1");
    SplitMix64 rng(seed);
    std::vector<Edge> e;
    std::vector<int> endpoints;  // each node appears once per incident edge
    int seed_size = m_attach + 1;
    for (int u = 0; u < seed_size; u++)
        for (int v = u + 1; v < seed_size; v++) {
            e.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    std::vector<char> picked(n, 0);
    for (int v = seed_size; v < n; v++) {
        std::vector<int> targets;
        while ((int)targets.size() < m_attach) {
            int u = endpoints[rng.below(endpoints.size())];
            if (!picked[u]) {
                picked[u] = 1;
                targets.push_back(u);
            }
        }
        for (int u : targets) {
            picked[u] = 0;
            e.push_back({u, v});
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    return Graph::from_edges(n, e);
}

// Uniform random labeled tree via a uniform Prüfer sequence.
inline Graph gen_random_tree(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_random_tree: need n >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{0, 1}});
    SplitMix64 rng(seed);
    std::vector<int> prufer(n - 2);
    for (int& x : prufer) x = rng.below_int(n);
    std::vector<int> deg(n, 1);
    for (int x : prufer) deg[x]++;
    std::vector<Edge> e;
    // standard linear decode: repeatedly join the smallest leaf to the next
    // code entry; node n-1 is always the last one standing
    int ptr = 0;
    while (deg[ptr] != 1) ptr++;
    int leaf = ptr;
    for (int x : prufer) {
        e.push_back({leaf, x});
        if (--deg[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ptr++;
            while (deg[ptr] != 1) ptr++;
            leaf = ptr;
        }
    }
    e.push_back({leaf, n - 1});
    return Graph::from_edges(n, e);
}

}  // namespace tts
