#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tts {

using Edge = std::pair<int, int>;

// Simple undirected graph with dense node ids 0..n-1. Immutable after
// construction; adjacency lists are sorted and deduplicated.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw std::invalid_argument("node count must be non-negative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" +
                                            std::to_string(u) + "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop at node " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        g.m_ = 0;
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            g.m_ += (long long)nbrs.size();
        }
        g.m_ /= 2;
        return g;
    }

    int n() const { return n_; }
    long long m() const { return m_; }
    int degree(int v) const { return (int)adj_[v].size(); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const {
        const auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; v++) d = std::max(d, degree(v));
        return d;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (int v = 0; v < n_; v++)
            for (int u : adj_[v])
                if (v < u) out.push_back({v, u});
        return out;
    }

    bool is_connected() const {
        if (n_ == 0) return false;
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : adj_[v])
                if (!seen[u]) {
                    seen[u] = 1;
                    cnt++;
                    stack.push_back(u);
                }
        }
        return cnt == n_;
    }

    bool is_tree() const { return n_ >= 1 && m_ == n_ - 1 && is_connected(); }

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Per-node thresholds. Valid when 0 <= tau(v) <= d(v) for every v.
struct ThresholdAssignment {
    std::vector<int> tau;

    int operator()(int v) const { return tau[v]; }
    size_t size() const { return tau.size(); }
    bool operator==(const ThresholdAssignment& o) const { return tau == o.tau; }
};

// tau(v) = ceil((d(v)+1)/2), except isolated nodes get 0 so the assignment
// stays within the 0 <= tau <= d validity bound.
inline ThresholdAssignment strict_majority(const Graph& g) {
    ThresholdAssignment t;
    t.tau.resize(g.n());
    for (int v = 0; v < g.n(); v++) {
        int d = g.degree(v);
        t.tau[v] = d == 0 ? 0 : (d + 2) / 2;  // ceil((d+1)/2)
    }
    return t;
}

// tau(v) = ceil(d(v)/2)
inline ThresholdAssignment simple_majority(const Graph& g) {
    ThresholdAssignment t;
    t.tau.resize(g.n());
    for (int v = 0; v < g.n(); v++) t.tau[v] = (g.degree(v) + 1) / 2;
    return t;
}

struct ThresholdViolation {
    int node;
    int tau;
    int degree;
};

inline std::vector<ThresholdViolation> validate_thresholds(const Graph& g,
                                                           const ThresholdAssignment& t) {
    if ((int)t.tau.size() != g.n())
        throw std::invalid_argument("threshold vector length does not match node count");
    std::vector<ThresholdViolation> out;
    for (int v = 0; v < g.n(); v++) {
        if (t.tau[v] < 0 || t.tau[v] > g.degree(v))
            out.push_back({v, t.tau[v], g.degree(v)});
    }
    return out;
}

inline void require_valid(const Graph& g, const ThresholdAssignment& t) {
    auto bad = validate_thresholds(g, t);
    if (!bad.empty())
        throw std::invalid_argument("invalid threshold at node " + std::to_string(bad[0].node) +
                                    ": tau=" + std::to_string(bad[0].tau) +
                                    " degree=" + std::to_string(bad[0].degree));
}

inline bool is_even_graph(const Graph& g) {
    for (int v = 0; v < g.n(); v++)
        if (g.degree(v) % 2 != 0) return false;
    return true;
}

}  // namespace tts
