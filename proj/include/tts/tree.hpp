#pragma once

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

#include "tts/graph.hpp"
#include "tts/schedule.hpp"

namespace tts {

enum class TreeClass { Leaf, APrime, ADoublePrime, B, C };

// Partition of the internal nodes by threshold vs. non-leaf neighbor count:
// A: tau > lbar (A' when tau < d, A'' when tau = d), B: tau < lbar, C: equal.
// The designated root counts as internal even if its degree is <= 1; the
// reductions below rely on that convention (without it the sweep undercounts,
// e.g. P_4 under strict majority).
struct TreeClassification {
    std::vector<int> leaf_count;     // l(v), internal nodes only
    std::vector<int> nonleaf_count;  // lbar(v)
    std::vector<TreeClass> cls;
    int root = -1;
};

namespace tree_detail {

// Working view of a tree being reduced: alive flags + mutable thresholds.
struct Work {
    const Graph* g = nullptr;
    std::vector<char> alive;
    std::vector<int> tau;
    std::vector<int> deg;  // alive degree

    int root = -1;                 // sweep root, classified internal throughout
    std::vector<int> parent;       // from the sweep root
    std::vector<int> level;
    std::vector<std::vector<int>> children;

    bool internal(int v) const { return deg[v] > 1 || v == root; }

    int lbar(int v) const {
        int c = 0;
        for (int u : g->neighbors(v))
            if (alive[u] && internal(u)) c++;
        return c;
    }

    bool in_a(int v) const { return internal(v) && tau[v] > lbar(v); }

    TreeClass classify(int v) const {
        if (!internal(v)) return TreeClass::Leaf;
        int lb = lbar(v);
        if (tau[v] > lb) return tau[v] == deg[v] ? TreeClass::ADoublePrime : TreeClass::APrime;
        return tau[v] < lb ? TreeClass::B : TreeClass::C;
    }

    // alive nodes of the subtree rooted at u (u first)
    std::vector<int> subtree(int u) const {
        std::vector<int> out, stack{u};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (int w : children[v])
                if (alive[w]) stack.push_back(w);
        }
        return out;
    }

    int count_a(const std::vector<int>& nodes) const {
        int c = 0;
        for (int v : nodes)
            if (in_a(v)) c++;
        return c;
    }

    void remove(const std::vector<int>& nodes) {
        for (int v : nodes) alive[v] = 0;
        for (int v : nodes)
            for (int u : g->neighbors(v))
                if (alive[u]) deg[u]--;
        for (int v : nodes) deg[v] = 0;
    }

    void restore(const std::vector<int>& nodes) {
        std::vector<char> fresh(g->n(), 0);
        for (int v : nodes) {
            alive[v] = 1;
            fresh[v] = 1;
        }
        for (int v : nodes) {
            int d = 0;
            for (int u : g->neighbors(v)) {
                if (!alive[u]) continue;
                d++;
                if (!fresh[u]) deg[u]++;
            }
            deg[v] = d;
        }
    }

    void set_root(int r) {
        root = r;
        int n = g->n();
        parent.assign(n, -1);
        level.assign(n, -1);
        children.assign(n, {});
        std::deque<int> bfs{r};
        level[r] = 0;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u : g->neighbors(v))
                if (level[u] < 0) {
                    level[u] = level[v] + 1;
                    parent[u] = v;
                    children[v].push_back(u);
                    bfs.push_back(u);
                }
        }
    }
};

// A''∪C members under the pure-degree classification (no root designated)
inline std::vector<int> adc_members(const Graph& g, const std::vector<int>& tau) {
    std::vector<int> out;
    for (int v = 0; v < g.n(); v++) {
        if (g.degree(v) <= 1) continue;
        int lb = 0;
        for (int u : g.neighbors(v))
            if (g.degree(u) > 1) lb++;
        bool in_c = tau[v] == lb;
        bool in_adouble = tau[v] > lb && tau[v] == g.degree(v);
        if (in_c || in_adouble) out.push_back(v);
    }
    return out;
}

// root selection shared by the size algorithm, the construction, and the
// 2|A| bound: the unique A''∪C member, else the lowest-id internal node,
// else node 0.
inline int pick_base_root(const Graph& g, const std::vector<int>& adc) {
    if (!adc.empty()) return adc[0];
    for (int v = 0; v < g.n(); v++)
        if (g.degree(v) > 1) return v;
    return 0;
}

struct HeadRecord {
    enum Kind { ADouble, Zero, CHead } kind;
    int u = -1, z = -1;
    std::vector<int> removed;  // nodes marked dead by this reduction
    int old_tau = 0;           // tau[z] (ADouble/Zero) or tau[u] (CHead) before the edit
    // construction data
    Schedule sub;             // base schedule of (T', tau'), global ids
    int u_first = -1;         // indices of u's two targets in sub (ADouble only)
    int u_second = -1;
    int desc_stable = 0;      // step from which T' \ L[u] stays positive without u
};

}  // namespace tree_detail

inline TreeClassification classify_nodes(const Graph& g, const ThresholdAssignment& t,
                                         int root) {
    if (!g.is_tree()) throw std::invalid_argument("classify_nodes: input is not a tree");
    require_valid(g, t);
    if (root < 0 || root >= g.n()) throw std::invalid_argument("classify_nodes: bad root");
    tree_detail::Work w;
    w.g = &g;
    w.alive.assign(g.n(), 1);
    w.tau = t.tau;
    w.deg.resize(g.n());
    for (int v = 0; v < g.n(); v++) w.deg[v] = g.degree(v);
    w.root = root;

    TreeClassification out;
    out.root = root;
    out.leaf_count.assign(g.n(), 0);
    out.nonleaf_count.assign(g.n(), 0);
    out.cls.resize(g.n());
    for (int v = 0; v < g.n(); v++) {
        out.cls[v] = w.classify(v);
        if (out.cls[v] != TreeClass::Leaf) {
            out.nonleaf_count[v] = w.lbar(v);
            out.leaf_count[v] = g.degree(v) - out.nonleaf_count[v];
        }
    }
    return out;
}

namespace tree_detail {

// Base construction for a working subtree with |A''∪C| <= 1 whose only
// possible member is the root: S_i = (L_{d-i} ∪ L_{d-i-1}) ∩ A, padded with
// empty sets until the rule has activated everything. Every A node is
// targeted at two consecutive steps and each positive node stays positive.
inline Schedule base_schedule(const Graph& sub, const std::vector<int>& tau, int root) {
    Work w;
    w.g = &sub;
    w.alive.assign(sub.n(), 1);
    w.tau = tau;
    w.deg.resize(sub.n());
    for (int v = 0; v < sub.n(); v++) w.deg[v] = sub.degree(v);
    w.set_root(root);

    int depth = 0;
    for (int v = 0; v < sub.n(); v++) depth = std::max(depth, w.level[v]);

    Schedule sched;
    sched.sets.assign(depth + 1, {});
    for (int v = 0; v < sub.n(); v++) {
        if (!w.in_a(v)) continue;
        int lv = w.level[v];
        // targeted at steps i with d-i = lv and d-i-1 = lv
        if (depth - lv >= 0 && depth - lv <= depth) sched.sets[depth - lv].push_back(v);
        if (depth - lv - 1 >= 0) sched.sets[depth - lv - 1].push_back(v);
    }
    for (auto& s : sched.sets) std::sort(s.begin(), s.end());

    ThresholdAssignment ta{tau};
    int cap = default_max_steps(sub) + 4;
    for (int pad = 0; pad <= cap; pad++) {
        sched.sets.push_back({});
        if (verify_tts(sub, ta, sched).accepted) return sched;
    }
    throw std::logic_error("base_schedule: level construction did not verify");
}

// Induced subgraph on the given global nodes; mapping[i] = global id.
struct SubInstance {
    Graph graph;
    std::vector<int> tau;
    std::vector<int> to_global;
    std::vector<int> to_local;  // -1 outside

    static SubInstance build(const Graph& g, const std::vector<char>& member,
                             const std::vector<int>& tau_full) {
        SubInstance s;
        s.to_local.assign(g.n(), -1);
        for (int v = 0; v < g.n(); v++)
            if (member[v]) {
                s.to_local[v] = (int)s.to_global.size();
                s.to_global.push_back(v);
            }
        std::vector<Edge> edges;
        for (int v = 0; v < g.n(); v++) {
            if (!member[v]) continue;
            for (int u : g.neighbors(v))
                if (member[u] && v < u) edges.push_back({s.to_local[v], s.to_local[u]});
        }
        s.graph = Graph::from_edges((int)s.to_global.size(), edges);
        s.tau.resize(s.to_global.size());
        for (size_t i = 0; i < s.to_global.size(); i++) s.tau[i] = tau_full[s.to_global[i]];
        return s;
    }

    Schedule to_global_schedule(const Schedule& local) const {
        Schedule out;
        for (auto& set : local.sets) {
            std::vector<int> gset;
            for (int v : set) gset.push_back(to_global[v]);
            std::sort(gset.begin(), gset.end());
            out.sets.push_back(std::move(gset));
        }
        return out;
    }
};

// Removing zero-threshold nodes keeps the optimum unchanged (they turn
// positive on their own from step `round` on and donate one unit to each
// neighbor). The sweep below assumes this normalization already happened;
// zeros born from reductions are handled inside the sweep itself.
struct ZeroNormalization {
    std::vector<char> alive;
    std::vector<int> tau;
    int rounds = 0;  // cascade depth; the composed schedule is delayed this much
};

inline ZeroNormalization normalize_zero_thresholds(const Graph& g,
                                                   const ThresholdAssignment& t) {
    ZeroNormalization out;
    out.alive.assign(g.n(), 1);
    out.tau = t.tau;
    std::vector<int> wave;
    for (int v = 0; v < g.n(); v++)
        if (out.tau[v] == 0) wave.push_back(v);
    while (!wave.empty()) {
        out.rounds++;
        std::vector<int> next;
        for (int v : wave) out.alive[v] = 0;
        for (int v : wave)
            for (int u : g.neighbors(v))
                if (out.alive[u] && out.tau[u] >= 1 && --out.tau[u] == 0) next.push_back(u);
        wave = std::move(next);
    }
    return out;
}

inline std::vector<std::vector<int>> forest_components(const Graph& g,
                                                       const std::vector<char>& alive) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); s++) {
        if (!alive[s] || seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (alive[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// The shared reduction sweep (the tree algorithm's loop) on a zero-free
// tree. Accumulates 2|A| counts; when collect is set it also builds the
// per-head construction records.
struct SweepOutcome {
    long long size = 0;
    bool swept = false;  // false: base case handled directly
    std::vector<HeadRecord> heads;
    Work work;  // final state (meaningful when swept)
};

inline SweepOutcome run_sweep(const Graph& g, const ThresholdAssignment& t, bool collect) {
    SweepOutcome out;
    Work& w = out.work;
    w.g = &g;
    w.alive.assign(g.n(), 1);
    w.tau = t.tau;
    w.deg.resize(g.n());
    for (int v = 0; v < g.n(); v++) w.deg[v] = g.degree(v);

    std::vector<int> adc = adc_members(g, t.tau);
    if ((int)adc.size() <= 1) {
        w.root = pick_base_root(g, adc);
        w.set_root(w.root);
        std::vector<int> all(g.n());
        for (int v = 0; v < g.n(); v++) all[v] = v;
        out.size = 2LL * w.count_a(all);
        return out;
    }

    out.swept = true;
    w.set_root(adc[0]);

    // level buckets from the fixed root, deepest first, ascending id inside
    int depth = 0;
    for (int v = 0; v < g.n(); v++) depth = std::max(depth, w.level[v]);
    std::vector<std::vector<int>> buckets(depth + 1);
    for (int v = 0; v < g.n(); v++) buckets[w.level[v]].push_back(v);
    for (auto& b : buckets) std::sort(b.begin(), b.end());

    for (int lv = depth; lv >= 1; lv--) {
        for (int u : buckets[lv]) {
            if (!w.alive[u]) continue;
            TreeClass c = w.classify(u);
            bool a_double = c == TreeClass::ADoublePrime;
            bool zero = w.tau[u] == 0;
            bool c_head = c == TreeClass::C && !zero;
            if (!a_double && !zero && !c_head) continue;

            int z = w.parent[u];
            std::vector<int> sub_nodes = w.subtree(u);
            out.size += 2LL * w.count_a(sub_nodes);

            HeadRecord rec;
            rec.u = u;
            rec.z = z;
            if (collect) {
                std::vector<char> member(g.n(), 0);
                for (int v : sub_nodes) member[v] = 1;
                std::vector<int> tau_sub = w.tau;
                // the head loses its parent edge; its subtree threshold drops
                // by one (A'' and C decompositions), zero heads keep tau = 0
                if (a_double || c_head) tau_sub[u] = w.tau[u] - 1;
                SubInstance inst = SubInstance::build(g, member, tau_sub);
                Schedule local = base_schedule(inst.graph, inst.tau, inst.to_local[u]);
                rec.sub = inst.to_global_schedule(local);

                if (a_double) {
                    // u is targeted at exactly two consecutive steps
                    for (int i = 0; i < (int)rec.sub.sets.size(); i++) {
                        auto& s = rec.sub.sets[i];
                        if (std::binary_search(s.begin(), s.end(), u)) {
                            if (rec.u_first < 0)
                                rec.u_first = i;
                            else
                                rec.u_second = i;
                        }
                    }
                    if (rec.u_first < 0 || rec.u_second != rec.u_first + 1)
                        throw std::logic_error("tree construction: malformed head targets");

                    // stability step of T' \ L[u] when u is never targeted
                    Schedule stripped = rec.sub;
                    auto strip = [&](std::vector<int>& s) {
                        s.erase(std::remove(s.begin(), s.end(), u), s.end());
                    };
                    strip(stripped.sets[rec.u_first]);
                    strip(stripped.sets[rec.u_second]);
                    Schedule local_stripped;
                    for (auto& s : stripped.sets) {
                        std::vector<int> loc;
                        for (int v : s) loc.push_back(inst.to_local[v]);
                        std::sort(loc.begin(), loc.end());
                        local_stripped.sets.push_back(loc);
                    }
                    int horizon = (int)local_stripped.sets.size() +
                                  default_max_steps(inst.graph) + 4;
                    int ulocal = inst.to_local[u];
                    NodeSet want(inst.graph.n());
                    for (int v = 0; v < inst.graph.n(); v++)
                        if (v != ulocal && !(inst.graph.degree(v) == 1 &&
                                             inst.graph.neighbors(v)[0] == ulocal))
                            want.set(v);
                    ThresholdAssignment ta{inst.tau};
                    NodeSet conf(inst.graph.n());
                    int stable = -1;
                    for (int step_i = 0; step_i <= horizon; step_i++) {
                        if (step_i > 0) conf = step(inst.graph, ta, conf);
                        if (step_i < (int)local_stripped.sets.size())
                            for (int v : local_stripped.sets[step_i]) conf.set(v);
                        if (want.is_subset_of(conf)) {
                            if (stable < 0) stable = step_i;
                        } else {
                            stable = -1;
                        }
                    }
                    if (stable < 0)
                        throw std::logic_error("tree construction: subtree did not stabilize");
                    rec.desc_stable = stable;
                }
            }

            if (a_double || zero) {
                rec.kind = zero ? HeadRecord::Zero : HeadRecord::ADouble;
                rec.removed = sub_nodes;
                rec.old_tau = w.tau[z];
                w.remove(sub_nodes);
                w.tau[z] = std::max(0, w.tau[z] - 1);
            } else {
                rec.kind = HeadRecord::CHead;
                rec.removed.clear();
                for (int v : sub_nodes)
                    if (v != u) rec.removed.push_back(v);
                rec.old_tau = w.tau[u];
                w.remove(rec.removed);
                w.tau[u] = 1;
            }
            if (collect) out.heads.push_back(std::move(rec));
        }
    }

    std::vector<int> remaining;
    for (int v = 0; v < g.n(); v++)
        if (w.alive[v]) remaining.push_back(v);
    out.size += 2LL * w.count_a(remaining);
    return out;
}

}  // namespace tree_detail

// Minimum TTS size on a tree. Zero-threshold nodes are stripped first (the
// optimum is invariant under that); each remaining component then goes
// through the sweep: 2|A| directly when |A''∪C| <= 1, otherwise the
// bottom-up reduction. Linear in n.
inline long long min_tts_tree_size(const Graph& g, const ThresholdAssignment& t) {
    if (!g.is_tree()) throw std::invalid_argument("tree solver: input is not a tree");
    require_valid(g, t);
    tree_detail::ZeroNormalization norm = tree_detail::normalize_zero_thresholds(g, t);
    if (norm.rounds == 0) return tree_detail::run_sweep(g, t, false).size;
    long long total = 0;
    for (const auto& comp : tree_detail::forest_components(g, norm.alive)) {
        std::vector<char> member(g.n(), 0);
        for (int v : comp) member[v] = 1;
        auto inst = tree_detail::SubInstance::build(g, member, norm.tau);
        total += tree_detail::run_sweep(inst.graph, ThresholdAssignment{inst.tau}, false).size;
    }
    return total;
}

// 2|A| lower bound after removing zero-threshold nodes (which the exact
// size is invariant under). Computed per component of the resulting forest
// with the same root convention as the solver, so the bound is tight on
// base-case instances.
inline long long tree_lower_bound_2A(const Graph& g, const ThresholdAssignment& t) {
    if (!g.is_tree()) throw std::invalid_argument("tree_lower_bound_2A: input is not a tree");
    require_valid(g, t);
    std::vector<char> alive(g.n(), 1);
    std::vector<int> tau = t.tau;
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); v++) deg[v] = g.degree(v);
    std::deque<int> zeros;
    for (int v = 0; v < g.n(); v++)
        if (tau[v] == 0) zeros.push_back(v);
    while (!zeros.empty()) {
        int v = zeros.front();
        zeros.pop_front();
        if (!alive[v]) continue;
        alive[v] = 0;
        for (int u : g.neighbors(v))
            if (alive[u]) {
                deg[u]--;
                if (tau[u] >= 1 && --tau[u] == 0) zeros.push_back(u);
            }
    }

    long long bound = 0;
    std::vector<char> seen(g.n(), 0);
    for (int s = 0; s < g.n(); s++) {
        if (!alive[s] || seen[s]) continue;
        std::vector<char> member(g.n(), 0);
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            member[v] = 1;
            for (int u : g.neighbors(v))
                if (alive[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        auto inst = tree_detail::SubInstance::build(g, member, tau);
        std::vector<int> adc = tree_detail::adc_members(inst.graph, inst.tau);
        tree_detail::Work w;
        w.g = &inst.graph;
        w.alive.assign(inst.graph.n(), 1);
        w.tau = inst.tau;
        w.deg.resize(inst.graph.n());
        for (int v = 0; v < inst.graph.n(); v++) w.deg[v] = inst.graph.degree(v);
        w.root = tree_detail::pick_base_root(inst.graph, adc);
        for (int v = 0; v < inst.graph.n(); v++)
            if (w.in_a(v)) bound += 2;
    }
    return bound;
}

namespace tree_detail {

// Optimal schedule for one zero-free tree. The sweep records one base
// schedule per reduction head; splicing re-inserts each head's two targets
// so that they line up with the step at which its parent first becomes
// (and stays) positive.
inline Schedule construct_component(const Graph& g, const ThresholdAssignment& t) {
    SweepOutcome sw = run_sweep(g, t, true);
    Work& w = sw.work;

    auto induced = [&]() {
        std::vector<char> member(w.alive.begin(), w.alive.end());
        return SubInstance::build(g, member, w.tau);
    };

    auto verify_current = [&](const Schedule& sched) {
        SubInstance inst = induced();
        Schedule local;
        for (auto& s : sched.sets) {
            std::vector<int> loc;
            for (int v : s) loc.push_back(inst.to_local[v]);
            std::sort(loc.begin(), loc.end());
            local.sets.push_back(std::move(loc));
        }
        return verify_tts(inst.graph, ThresholdAssignment{inst.tau}, local);
    };

    // pad with trailing empty sets until the current working tree accepts
    auto pad_accept = [&](Schedule& sched) {
        int cap = default_max_steps(g) + 4;
        for (int i = 0; i <= cap; i++) {
            if (!sched.sets.empty() && sched.sets.back().empty() &&
                verify_current(sched).accepted)
                return;
            sched.sets.push_back({});
        }
        throw std::logic_error("construct_tts_tree: spliced schedule does not verify");
    };

    Schedule combined;
    if (!sw.swept) {
        SubInstance inst = induced();
        Schedule local = base_schedule(inst.graph, inst.tau, inst.to_local[w.root]);
        return inst.to_global_schedule(local);
    }

    {
        SubInstance inst = induced();
        Schedule local = base_schedule(inst.graph, inst.tau, inst.to_local[w.root]);
        combined = inst.to_global_schedule(local);
    }

    auto union_sets = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a);
        out.insert(out.end(), b.begin(), b.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    for (int j = (int)sw.heads.size() - 1; j >= 0; j--) {
        HeadRecord& H = sw.heads[j];

        if (H.kind == HeadRecord::ADouble) {
            // first step from which the parent z is positive for good in the
            // current combined schedule
            VerifyResult vr = verify_current(combined);
            if (!vr.accepted) throw std::logic_error("construct_tts_tree: invariant broken");
            SubInstance cur = induced();
            int zl = cur.to_local[H.z];
            int stable_z = (int)vr.a_trace.size() - 1;
            while (stable_z > 0 && vr.a_trace[stable_z - 1].test(zl)) stable_z--;
            if (stable_z < 1) {
                // z already positive at step 0; one leading empty step makes
                // room for u's first target
                combined.sets.insert(combined.sets.begin(), std::vector<int>{});
                vr = verify_current(combined);
                stable_z = (int)vr.a_trace.size() - 1;
                while (stable_z > 0 && vr.a_trace[stable_z - 1].test(zl)) stable_z--;
                if (stable_z < 1) throw std::logic_error("construct_tts_tree: z stable at 0");
            }

            Schedule schedA = H.sub;
            auto strip = [&](std::vector<int>& s) {
                s.erase(std::remove(s.begin(), s.end(), H.u), s.end());
            };
            strip(schedA.sets[H.u_first]);
            strip(schedA.sets[H.u_second]);

            int i = stable_z;
            int F = std::max({0, 1 - i, H.desc_stable - i});
            int q = F + i - 1;
            size_t total = std::max({schedA.sets.size(), size_t(q + 2),
                                     size_t(F) + combined.sets.size()});
            Schedule merged;
            merged.sets.assign(total, {});
            for (size_t p = 0; p < total; p++) {
                std::vector<int> s;
                if (p < schedA.sets.size()) s = schedA.sets[p];
                if ((int)p >= F && p - F < combined.sets.size())
                    s = union_sets(s, combined.sets[p - F]);
                if ((int)p == q || (int)p == q + 1) s = union_sets(s, {H.u});
                merged.sets[p] = std::move(s);
            }
            w.restore(H.removed);
            w.tau[H.z] = H.old_tau;
            pad_accept(merged);
            combined = std::move(merged);
        } else if (H.kind == HeadRecord::Zero) {
            Schedule merged = H.sub;
            for (auto& s : combined.sets) merged.sets.push_back(s);
            w.restore(H.removed);
            w.tau[H.z] = H.old_tau;
            pad_accept(merged);
            combined = std::move(merged);
        } else {  // CHead
            w.restore(H.removed);
            w.tau[H.u] = H.old_tau;
            int base_off = std::max(0, (int)H.sub.sets.size() - 2);
            int cap_off = (int)H.sub.sets.size() + default_max_steps(g) + 4;
            bool ok = false;
            for (int F = base_off; F <= cap_off && !ok; F++) {
                size_t total = std::max(H.sub.sets.size(), size_t(F) + combined.sets.size());
                Schedule merged;
                merged.sets.assign(total, {});
                for (size_t p = 0; p < total; p++) {
                    std::vector<int> s;
                    if (p < H.sub.sets.size()) s = H.sub.sets[p];
                    if ((int)p >= F && p - F < combined.sets.size())
                        s = union_sets(s, combined.sets[p - F]);
                    merged.sets[p] = std::move(s);
                }
                if (merged.sets.back().empty() && verify_current(merged).accepted) {
                    combined = std::move(merged);
                    ok = true;
                } else {
                    merged.sets.push_back({});
                    if (verify_current(merged).accepted) {
                        combined = std::move(merged);
                        ok = true;
                    }
                }
            }
            if (!ok) throw std::logic_error("construct_tts_tree: C splice failed");
        }
    }

    VerifyResult final_vr = verify_tts(g, t, combined);
    if (!final_vr.accepted || combined.size() != sw.size)
        throw std::logic_error("construct_tts_tree: result failed final verification");
    return combined;
}

}  // namespace tree_detail

// Builds a schedule of exactly min_tts_tree_size targets, accepted by the
// verifier against the caller's thresholds. Zero-threshold nodes activate
// by themselves within the first `rounds` steps, so the per-component
// schedules start after that delay.
inline Schedule construct_tts_tree(const Graph& g, const ThresholdAssignment& t) {
    if (!g.is_tree()) throw std::invalid_argument("tree solver: input is not a tree");
    require_valid(g, t);
    tree_detail::ZeroNormalization norm = tree_detail::normalize_zero_thresholds(g, t);
    if (norm.rounds == 0) return tree_detail::construct_component(g, t);

    Schedule combined;
    combined.sets.assign(norm.rounds, {});
    long long want_size = 0;
    for (const auto& comp : tree_detail::forest_components(g, norm.alive)) {
        std::vector<char> member(g.n(), 0);
        for (int v : comp) member[v] = 1;
        auto inst = tree_detail::SubInstance::build(g, member, norm.tau);
        Schedule local = tree_detail::construct_component(inst.graph,
                                                          ThresholdAssignment{inst.tau});
        Schedule part = inst.to_global_schedule(local);
        want_size += part.size();
        for (size_t i = 0; i < part.sets.size(); i++) {
            size_t pos = norm.rounds + i;
            if (pos >= combined.sets.size()) combined.sets.push_back({});
            auto& dst = combined.sets[pos];
            dst.insert(dst.end(), part.sets[i].begin(), part.sets[i].end());
            std::sort(dst.begin(), dst.end());
        }
    }
    int cap = default_max_steps(g) + 4;
    for (int pad = 0; pad <= cap; pad++) {
        if (!combined.sets.empty() && combined.sets.back().empty() &&
            verify_tts(g, t, combined).accepted)
            break;
        combined.sets.push_back({});
        if (pad == cap)
            throw std::logic_error("construct_tts_tree: zero-composition does not verify");
    }
    if (combined.size() != want_size || combined.size() != min_tts_tree_size(g, t))
        throw std::logic_error("construct_tts_tree: zero-composition size mismatch");
    return combined;
}

}  // namespace tts
