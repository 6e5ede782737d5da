#pragma once

#include <vector>

#include "tts/graph.hpp"

namespace tts {

// Bipartite double cover: copies x_i = i and y_i = n + i, with an edge
// x_i y_j for every original edge v_i v_j. Thresholds mirror. The minimum
// TTS size of the cover is exactly twice the original's.
struct DoubleCover {
    Graph graph;
    ThresholdAssignment tau;
    std::vector<int> x_of;  // x_of[i] = id of x_i
    std::vector<int> y_of;
};

inline DoubleCover bipartite_double_cover(const Graph& g, const ThresholdAssignment& t) {
    require_valid(g, t);
    const int n = g.n();
    DoubleCover dc;
    dc.x_of.resize(n);
    dc.y_of.resize(n);
    for (int i = 0; i < n; i++) {
        dc.x_of[i] = i;
        dc.y_of[i] = n + i;
    }
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        e.push_back({dc.x_of[u], dc.y_of[v]});
        e.push_back({dc.x_of[v], dc.y_of[u]});
    }
    dc.graph = Graph::from_edges(2 * n, e);
    dc.tau.tau.resize(2 * n);
    for (int i = 0; i < n; i++) dc.tau.tau[i] = dc.tau.tau[n + i] = t.tau[i];
    return dc;
}

// Reduction gadget: ceil(d(v)/2) pendant triangles per node (two new
// adjacent nodes, both adjacent to v, threshold 1). The minimum TTS of the
// result equals the minimum progressive TS of the input.
struct HardnessGadget {
    Graph graph;
    ThresholdAssignment tau;
    int original_n = 0;                          // originals keep ids 0..n-1
    std::vector<std::pair<int, int>> gadget_of;  // per gadget: the node pair
};

inline HardnessGadget hardness_gadget(const Graph& h, const ThresholdAssignment& t) {
    require_valid(h, t);
    const int n = h.n();
    HardnessGadget out;
    out.original_n = n;
    std::vector<Edge> e = h.edges();
    int next = n;
    for (int v = 0; v < n; v++) {
        int copies = (h.degree(v) + 1) / 2;
        for (int c = 0; c < copies; c++) {
            int a = next++, b = next++;
            e.push_back({a, b});
            e.push_back({v, a});
            e.push_back({v, b});
            out.gadget_of.push_back({a, b});
        }
    }
    out.graph = Graph::from_edges(next, e);
    out.tau.tau.assign(next, 1);
    for (int v = 0; v < n; v++) out.tau.tau[v] = t.tau[v];
    return out;
}

}  // namespace tts
