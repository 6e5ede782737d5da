#pragma once

#include <optional>
#include <string>

#include "tts/graph.hpp"
#include "tts/tree.hpp"

namespace tts {

namespace detail {

// The bound theorems assume tau(v) = ceil((d(v)+1)/2) for every node. A
// graph with an isolated node admits no such assignment (the formula would
// exceed d = 0), so the bounds are inapplicable there by construction.
inline bool is_exact_strict_majority(const Graph& g, const ThresholdAssignment& t) {
    if ((int)t.tau.size() != g.n()) return false;
    for (int v = 0; v < g.n(); v++)
        if (t.tau[v] != (g.degree(v) + 2) / 2) return false;
    return true;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace detail

// 2n/(Delta+1) under strict majority, rounded up since the bounded quantity
// is an integer.
inline long long lb_strict_majority(const Graph& g, const ThresholdAssignment& t) {
    if (!detail::is_exact_strict_majority(g, t))
        throw std::invalid_argument("lb_strict_majority: tau is not the strict majority");
    if (g.n() == 0) return 0;
    return detail::ceil_div(2LL * g.n(), g.max_degree() + 1);
}

// 4n/(Delta+2) for even graphs under strict majority.
inline long long lb_even(const Graph& g, const ThresholdAssignment& t) {
    if (!detail::is_exact_strict_majority(g, t))
        throw std::invalid_argument("lb_even: tau is not the strict majority");
    if (!is_even_graph(g)) throw std::invalid_argument("lb_even: graph has an odd degree");
    if (g.n() == 0) return 0;
    return detail::ceil_div(4LL * g.n(), g.max_degree() + 2);
}

struct BoundReport {
    long long value = 0;
    std::string which = "none";
};

// Maximum over the applicable closed-form bounds; (0, "none") when nothing
// applies. Applicability is checked structurally, never assumed.
inline BoundReport best_lower_bound(const Graph& g, const ThresholdAssignment& t) {
    BoundReport best;
    if (detail::is_exact_strict_majority(g, t)) {
        long long v = lb_strict_majority(g, t);
        if (v > best.value) best = {v, "strict-majority"};
        if (is_even_graph(g)) {
            long long e = lb_even(g, t);
            if (e > best.value) best = {e, "even"};
        }
    }
    if (g.is_tree()) {
        long long v = tree_lower_bound_2A(g, t);
        if (v > best.value) best = {v, "tree-2A"};
    }
    return best;
}

}  // namespace tts
