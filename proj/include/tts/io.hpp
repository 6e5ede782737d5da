#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tts/graph.hpp"
#include "tts/schedule.hpp"

namespace tts {

// Edge-list ingestion: one edge per line, two whitespace-separated labels;
// '#' lines are comments. Undirected: duplicate and reversed-duplicate
// lines collapse. Labels (arbitrary strings) are remapped to dense ids in
// first-seen order.
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;                  // id -> label
    std::unordered_map<std::string, int> id_of;

    int require_id(const std::string& label) const {
        auto it = id_of.find(label);
        if (it == id_of.end()) throw std::invalid_argument("unknown node label: " + label);
        return it->second;
    }
};

inline LabeledGraph read_edge_list(std::istream& in) {
    LabeledGraph lg;
    std::vector<Edge> edges;
    auto intern = [&](const std::string& s) {
        auto it = lg.id_of.find(s);
        if (it != lg.id_of.end()) return it->second;
        int id = (int)lg.labels.size();
        lg.labels.push_back(s);
        lg.id_of.emplace(s, id);
        return id;
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b))
            throw std::invalid_argument("malformed edge at line " + std::to_string(lineno));
        edges.push_back({intern(a), intern(b)});
    }
    lg.graph = Graph::from_edges((int)lg.labels.size(), edges);
    return lg;
}

inline LabeledGraph read_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open edge list: " + path);
    return read_edge_list(f);
}

inline void write_edge_list(std::ostream& out, const Graph& g,
                            const std::string& header_comment = "") {
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

// Threshold file: `label value` per line, '#' comments.
inline ThresholdAssignment read_thresholds(std::istream& in, const LabeledGraph& lg) {
    ThresholdAssignment t;
    t.tau.assign(lg.graph.n(), -1);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::string label;
        int value;
        if (!(ls >> label >> value))
            throw std::invalid_argument("malformed threshold at line " + std::to_string(lineno));
        t.tau[lg.require_id(label)] = value;
    }
    for (int v = 0; v < lg.graph.n(); v++)
        if (t.tau[v] < 0)
            throw std::invalid_argument("no threshold given for node " + lg.labels[v]);
    return t;
}

inline ThresholdAssignment thresholds_from_rule(const Graph& g, const std::string& rule) {
    if (rule == "strict") return strict_majority(g);
    if (rule == "simple") return simple_majority(g);
    throw std::invalid_argument("unknown threshold rule: " + rule);
}

// Schedule text: line i reads `i:` followed by the labels of S_i.
inline void write_schedule(std::ostream& out, const Schedule& sched,
                           const std::vector<std::string>* labels = nullptr) {
    for (size_t i = 0; i < sched.sets.size(); i++) {
        out << i << ":";
        for (int v : sched.sets[i]) {
            out << " ";
            if (labels)
                out << (*labels)[v];
            else
                out << v;
        }
        out << "\n";
    }
}

inline Schedule read_schedule(std::istream& in, const LabeledGraph& lg) {
    Schedule sched;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("schedule line " + std::to_string(lineno) +
                                        " lacks `i:` prefix");
        int idx = std::stoi(line.substr(0, colon));
        if (idx != (int)sched.sets.size())
            throw std::invalid_argument("schedule line " + std::to_string(lineno) +
                                        " out of order (expected " +
                                        std::to_string(sched.sets.size()) + ")");
        std::istringstream ls(line.substr(colon + 1));
        std::vector<int> set;
        std::string label;
        while (ls >> label) set.push_back(lg.require_id(label));
        std::sort(set.begin(), set.end());
        sched.sets.push_back(std::move(set));
    }
    if (sched.sets.empty()) throw std::invalid_argument("empty schedule file");
    return sched;
}

}  // namespace tts
