#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tts/bitset.hpp"
#include "tts/dynamics.hpp"
#include "tts/graph.hpp"

namespace tts {

// A candidate timed target set: the sequence S_0..S_k. Positive nodes at
// step i are A_i = S_i ∪ Q_i where Q_0 = ∅ and Q_i is the set activated by
// the threshold rule from A_{i-1}. The sequence is accepted when S_k = ∅
// and Q_k = V. Size counts every targeted occurrence.
struct Schedule {
    std::vector<std::vector<int>> sets;  // sets[i] = S_i, sorted node ids

    int horizon() const { return (int)sets.size() - 1; }
    long long size() const {
        long long s = 0;
        for (auto& si : sets) s += (long long)si.size();
        return s;
    }
};

inline Schedule make_schedule(std::vector<std::vector<int>> sets) {
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return Schedule{std::move(sets)};
}

enum class RejectReason { None, NonemptyFinalSet, FinalQNotAllPositive, IdOutOfRange };

inline const char* reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::None: return "none";
        case RejectReason::NonemptyFinalSet: return "nonempty-final-S";
        case RejectReason::FinalQNotAllPositive: return "Q-final-not-V";
        case RejectReason::IdOutOfRange: return "id-range";
    }
    return "?";
}

struct VerifyResult {
    bool accepted = false;
    RejectReason reason = RejectReason::None;
    int failing_index = -1;
    std::vector<NodeSet> q_trace;  // Q_0..Q_k (complete on accept)

    // A_i = S_i ∪ Q_i, handy for tests and splicing
    std::vector<NodeSet> a_trace;
};

inline VerifyResult verify_tts(const Graph& g, const ThresholdAssignment& t,
                               const Schedule& sched) {
    require_valid(g, t);
    if (sched.sets.empty()) throw std::invalid_argument("schedule must contain S_0");
    const int n = g.n();
    const int k = sched.horizon();

    VerifyResult res;
    for (int i = 0; i <= k; i++)
        for (int v : sched.sets[i])
            if (v < 0 || v >= n) {
                res.reason = RejectReason::IdOutOfRange;
                res.failing_index = i;
                return res;
            }

    NodeSet q(n);  // Q_0 = ∅
    for (int i = 0; i <= k; i++) {
        if (i > 0) q = step(g, t, res.a_trace[i - 1], Model::NonProgressive);
        res.q_trace.push_back(q);
        NodeSet a = q;
        for (int v : sched.sets[i]) a.set(v);
        res.a_trace.push_back(a);
    }

    if (!sched.sets[k].empty()) {
        res.reason = RejectReason::NonemptyFinalSet;
        res.failing_index = k;
        return res;
    }
    if (!res.q_trace[k].all()) {
        res.reason = RejectReason::FinalQNotAllPositive;
        res.failing_index = k;
        return res;
    }
    res.accepted = true;
    return res;
}

inline bool verify_ts(const Graph& g, const ThresholdAssignment& t, const std::vector<int>& s,
                      Model model) {
    NodeSet conf(g.n());
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("node id out of range");
        conf.set(v);
    }
    return reaches_all_positive(g, t, conf, model);
}

inline bool is_disjoint_schedule(const Schedule& sched) {
    std::vector<int> all;
    for (auto& s : sched.sets) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

// Embed a TS as the schedule (S, ∅, ..., ∅); the horizon is the first step
// at which A_i = V. Realizes the chain MTT <= MDTT <= MT in tests.
inline Schedule ts_as_schedule(const Graph& g, const ThresholdAssignment& t,
                               const std::vector<int>& s) {
    require_valid(g, t);
    if (!verify_ts(g, t, s, Model::NonProgressive))
        throw std::invalid_argument("ts_as_schedule: input set is not a TS");
    NodeSet conf(g.n());
    for (int v : s) conf.set(v);
    Schedule sched;
    sched.sets.push_back(s);
    std::sort(sched.sets[0].begin(), sched.sets[0].end());
    int cap = default_max_steps(g) + 2;
    for (int i = 1; i <= cap; i++) {
        conf = step(g, t, conf, Model::NonProgressive);
        sched.sets.push_back({});
        if (conf.all()) return sched;
    }
    throw std::logic_error("ts_as_schedule: verified TS did not reach V");  // unreachable
}

// Drop v from S_i whenever the rule already activates it (v ∈ Q_i, i >= 1),
// then truncate at the first step where Q = V. The A_i sequence up to the
// new horizon is unchanged, so the result is still accepted and no larger.
inline Schedule normalize_schedule(const Graph& g, const ThresholdAssignment& t,
                                   const Schedule& sched) {
    VerifyResult vr = verify_tts(g, t, sched);
    if (!vr.accepted)
        throw std::invalid_argument(std::string("normalize_schedule: input rejected: ") +
                                    reject_reason_name(vr.reason));
    int k_new = 0;
    while (!vr.q_trace[k_new].all()) k_new++;
    Schedule out;
    for (int i = 0; i < k_new; i++) {
        std::vector<int> si;
        for (int v : sched.sets[i])
            if (i == 0 || !vr.q_trace[i].test(v)) si.push_back(v);
        out.sets.push_back(std::move(si));
    }
    out.sets.push_back({});  // S_{k'} = ∅
    return out;
}

}  // namespace tts
