#include <catch2/catch_amalgamated.hpp>

#include "tts/exact.hpp"
#include "tts/generators.hpp"
#include "tts/rng.hpp"
#include "tts/transforms.hpp"

using namespace tts;

TEST_CASE("double cover of K_2 is a perfect matching on four nodes") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    ThresholdAssignment tau{{1, 1}};
    DoubleCover dc = bipartite_double_cover(k2, tau);
    REQUIRE(dc.graph.n() == 4);
    REQUIRE(dc.graph.m() == 2);
    REQUIRE(dc.graph.has_edge(dc.x_of[0], dc.y_of[1]));
    REQUIRE(dc.graph.has_edge(dc.x_of[1], dc.y_of[0]));
    REQUIRE(dc.tau.tau == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("double cover of C_3 is C_6") {
    Graph c3 = gen_cycle(3);
    DoubleCover dc = bipartite_double_cover(c3, strict_majority(c3));
    REQUIRE(dc.graph.n() == 6);
    REQUIRE(dc.graph.m() == 6);
    for (int v = 0; v < 6; v++) REQUIRE(dc.graph.degree(v) == 2);
    REQUIRE(dc.graph.is_connected());
}

TEST_CASE("double cover preserves degrees per copy") {
    Graph g = gen_er(7, 0.5, 9);
    ThresholdAssignment tau = strict_majority(g);
    DoubleCover dc = bipartite_double_cover(g, tau);
    for (int i = 0; i < g.n(); i++) {
        REQUIRE(dc.graph.degree(dc.x_of[i]) == g.degree(i));
        REQUIRE(dc.graph.degree(dc.y_of[i]) == g.degree(i));
    }
}

TEST_CASE("double cover doubles the minimum TTS size") {
    int done = 0;
    for (uint64_t seed = 0; done < 10; seed++) {
        SplitMix64 rng(split_seed(91, seed));
        int n = 3 + rng.below_int(5);
        Graph g = gen_er(n, 0.5, split_seed(92, seed));
        ThresholdAssignment tau;
        if (seed % 2 == 0) {
            tau = strict_majority(g);
        } else {
            tau.tau.resize(n);
            for (int v = 0; v < n; v++) tau.tau[v] = rng.below_int(g.degree(v) + 1);
        }
        DoubleCover dc = bipartite_double_cover(g, tau);
        REQUIRE(min_tts_exact(dc.graph, dc.tau).size == 2 * min_tts_exact(g, tau).size);
        done++;
    }
}

TEST_CASE("hardness gadget structure") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    ThresholdAssignment tau{{1, 1}};
    HardnessGadget hg = hardness_gadget(k2, tau);
    REQUIRE(hg.graph.n() == 6);  // one pendant triangle per endpoint
    REQUIRE(hg.gadget_of.size() == 2);
    for (auto [a, b] : hg.gadget_of) {
        REQUIRE(hg.graph.degree(a) == 2);
        REQUIRE(hg.graph.degree(b) == 2);
        REQUIRE(hg.graph.has_edge(a, b));
        REQUIRE(hg.tau.tau[a] == 1);
        REQUIRE(hg.tau.tau[b] == 1);
    }
}

TEST_CASE("gadget equates progressive MT with MTT") {
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    ThresholdAssignment tau{{1, 1}};
    HardnessGadget hg = hardness_gadget(k2, tau);
    REQUIRE(min_ts_exact(k2, tau, Model::Progressive).size == 1);
    REQUIRE(min_tts_exact(hg.graph, hg.tau).size == 1);

    int done = 0;
    for (uint64_t seed = 0; done < 6; seed++) {
        SplitMix64 rng(split_seed(95, seed));
        int n = 3 + rng.below_int(3);
        Graph h = gen_er(n, 0.45, split_seed(96, seed));
        if (h.m() > 5) continue;
        ThresholdAssignment th = strict_majority(h);
        HardnessGadget g2 = hardness_gadget(h, th);
        if (g2.graph.n() > 20) continue;
        long long mt = min_ts_exact(h, th, Model::Progressive).size;
        long long mtt = min_tts_exact(g2.graph, g2.tau, 22).size;
        INFO("seed=" << seed << " n=" << n << " m=" << h.m());
        REQUIRE(mt == mtt);
        done++;
    }
}
