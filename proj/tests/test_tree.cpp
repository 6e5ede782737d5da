#include <catch2/catch_amalgamated.hpp>

#include "free_trees.hpp"
#include "tts/exact.hpp"
#include "tts/generators.hpp"
#include "tts/rng.hpp"
#include "tts/tree.hpp"

using namespace tts;

TEST_CASE("classify_nodes on the paper shapes") {
    Graph s = gen_star(10);
    TreeClassification cs = classify_nodes(s, strict_majority(s), 0);
    REQUIRE(cs.cls[0] == TreeClass::APrime);
    REQUIRE(cs.nonleaf_count[0] == 0);
    REQUIRE(cs.leaf_count[0] == 9);
    for (int v = 1; v < 10; v++) REQUIRE(cs.cls[v] == TreeClass::Leaf);

    Graph p4 = gen_path(4);
    TreeClassification cp = classify_nodes(p4, strict_majority(p4), 1);
    REQUIRE(cp.cls[1] == TreeClass::ADoublePrime);
    REQUIRE(cp.cls[2] == TreeClass::ADoublePrime);

    Graph p3 = gen_path(3);
    TreeClassification c3 = classify_nodes(p3, strict_majority(p3), 1);
    REQUIRE(c3.cls[1] == TreeClass::ADoublePrime);

    REQUIRE_THROWS_AS(classify_nodes(gen_cycle(4), strict_majority(gen_cycle(4)), 0),
                      std::invalid_argument);
}

TEST_CASE("known tree sizes") {
    Graph s = gen_star(10);
    REQUIRE(min_tts_tree_size(s, strict_majority(s)) == 2);
    Graph p3 = gen_path(3);
    REQUIRE(min_tts_tree_size(p3, strict_majority(p3)) == 2);
    Graph p4 = gen_path(4);
    REQUIRE(min_tts_tree_size(p4, strict_majority(p4)) == 4);
    // the exact oracle agrees
    REQUIRE(min_tts_exact(p4, strict_majority(p4)).size == 4);
    Graph k2 = Graph::from_edges(2, {{0, 1}});
    REQUIRE(min_tts_tree_size(k2, ThresholdAssignment{{1, 1}}) == 2);
    Graph lone = Graph::from_edges(1, {});
    REQUIRE(min_tts_tree_size(lone, ThresholdAssignment{{0}}) == 0);
}

TEST_CASE("construction matches the size on the known shapes") {
    for (int n : {2, 3, 4, 5, 7, 10}) {
        Graph p = gen_path(n);
        ThresholdAssignment tau = strict_majority(p);
        Schedule sched = construct_tts_tree(p, tau);
        REQUIRE(verify_tts(p, tau, sched).accepted);
        REQUIRE(sched.size() == min_tts_tree_size(p, tau));
    }
    Graph s = gen_star(10);
    Schedule sched = construct_tts_tree(s, strict_majority(s));
    REQUIRE(sched.size() == 2);
}

TEST_CASE("lower bound 2|A|") {
    Graph s = gen_star(10);
    REQUIRE(tree_lower_bound_2A(s, strict_majority(s)) == 2);
    Graph p4 = gen_path(4);
    REQUIRE(tree_lower_bound_2A(p4, strict_majority(p4)) == 4);
    // all-tau-1 path P_5: every internal node has lbar >= 1 >= tau, so A = ∅
    Graph p5 = gen_path(5);
    ThresholdAssignment ones{{1, 1, 1, 1, 1}};
    REQUIRE(tree_lower_bound_2A(p5, ones) == 0);
}

TEST_CASE("oracle equivalence on random trees with random valid thresholds") {
    for (uint64_t seed = 0; seed < 120; seed++) {
        SplitMix64 rng(split_seed(71, seed));
        int n = 2 + rng.below_int(11);
        Graph t = gen_random_tree(n, split_seed(72, seed));
        ThresholdAssignment tau;
        tau.tau.resize(n);
        for (int v = 0; v < n; v++) tau.tau[v] = 1 + rng.below_int(t.degree(v));

        long long fast = min_tts_tree_size(t, tau);
        long long slow = min_tts_exact(t, tau).size;
        INFO("seed=" << seed << " n=" << n);
        REQUIRE(fast == slow);
        REQUIRE(fast >= tree_lower_bound_2A(t, tau));

        Schedule sched = construct_tts_tree(t, tau);
        REQUIRE(verify_tts(t, tau, sched).accepted);
        REQUIRE(sched.size() == fast);
    }
}

TEST_CASE("oracle equivalence with zero thresholds allowed") {
    // zero-threshold nodes exercise the removal branch end to end
    for (uint64_t seed = 0; seed < 60; seed++) {
        SplitMix64 rng(split_seed(81, seed));
        int n = 2 + rng.below_int(9);
        Graph t = gen_random_tree(n, split_seed(82, seed));
        ThresholdAssignment tau;
        tau.tau.resize(n);
        for (int v = 0; v < n; v++) tau.tau[v] = rng.below_int(t.degree(v) + 1);

        long long fast = min_tts_tree_size(t, tau);
        long long slow = min_tts_exact(t, tau).size;
        INFO("seed=" << seed << " n=" << n);
        REQUIRE(fast == slow);
        REQUIRE(fast >= tree_lower_bound_2A(t, tau));

        Schedule sched = construct_tts_tree(t, tau);
        REQUIRE(verify_tts(t, tau, sched).accepted);
        REQUIRE(sched.size() == fast);
    }
}

TEST_CASE("equality of size and 2|A| bound on base-case instances") {
    // spider: center with three legs of two edges each, strict majority
    std::vector<Edge> e;
    int id = 1;
    for (int leg = 0; leg < 3; leg++) {
        int mid = id++;
        e.push_back({0, mid});
        for (int k = 0; k < 3; k++) e.push_back({mid, id++});
    }
    Graph spider = Graph::from_edges(id, e);
    ThresholdAssignment tau = strict_majority(spider);
    // mids are A' (tau=3 > lbar=1), center is B — a base-case tree
    REQUIRE(min_tts_tree_size(spider, tau) == 6);
    REQUIRE(tree_lower_bound_2A(spider, tau) == 6);
    REQUIRE(min_tts_exact(spider, tau).size == 6);
}

TEST_CASE("exhaustive equivalence over free trees up to 8 nodes, every valid tau") {
    const size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 2; n <= 8; n++) {
        auto trees = tts_test::all_free_trees(n);
        REQUIRE(trees.size() == expected[n]);
        for (size_t ti = 0; ti < trees.size(); ti++) {
            const Graph& t = trees[ti];
            ThresholdAssignment tau;
            tau.tau.assign(n, 1);
            // odometer over 1 <= tau(v) <= d(v)
            for (;;) {
                long long fast = min_tts_tree_size(t, tau);
                long long slow = min_tts_exact(t, tau).size;
                INFO("n=" << n << " tree=" << ti);
                REQUIRE(fast == slow);
                Schedule sched = construct_tts_tree(t, tau);
                REQUIRE(verify_tts(t, tau, sched).accepted);
                REQUIRE(sched.size() == fast);

                int v = 0;
                while (v < n && tau.tau[v] == t.degree(v)) tau.tau[v++] = 1;
                if (v == n) break;
                tau.tau[v]++;
            }
        }
    }
}

TEST_CASE("linear-ish scaling sanity on paths") {
    // not a strict benchmark; catches accidental quadratic blowups in size
    Graph p1 = gen_path(20000);
    Graph p2 = gen_path(40000);
    auto t0 = std::chrono::steady_clock::now();
    min_tts_tree_size(p1, strict_majority(p1));
    auto t1 = std::chrono::steady_clock::now();
    min_tts_tree_size(p2, strict_majority(p2));
    auto t2 = std::chrono::steady_clock::now();
    auto d1 = std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();
    auto d2 = std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();
    REQUIRE(d2 < 20 * std::max<long long>(d1, 1000));
}

TEST_CASE("errors") {
    Graph c4 = gen_cycle(4);
    REQUIRE_THROWS_AS(min_tts_tree_size(c4, strict_majority(c4)), std::invalid_argument);
    Graph p3 = gen_path(3);
    REQUIRE_THROWS_AS(min_tts_tree_size(p3, ThresholdAssignment{{2, 1, 1}}),
                      std::invalid_argument);
}
