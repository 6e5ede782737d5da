#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "tts/io.hpp"

using namespace tts;

TEST_CASE("edge list ingestion remaps labels in first-seen order") {
    std::istringstream in(
        "# a comment\n"
        "alice bob\n"
        "bob carol\n"
        "carol alice\n"
        "bob alice\n"   // reversed duplicate collapses
        "alice bob\n");  // duplicate collapses
    LabeledGraph lg = read_edge_list(in);
    REQUIRE(lg.graph.n() == 3);
    REQUIRE(lg.graph.m() == 3);
    REQUIRE(lg.labels == std::vector<std::string>{"alice", "bob", "carol"});
    REQUIRE(lg.require_id("carol") == 2);
    REQUIRE_THROWS_AS(lg.require_id("dave"), std::invalid_argument);
}

TEST_CASE("edge list errors") {
    std::istringstream selfloop("a a\n");
    REQUIRE_THROWS_AS(read_edge_list(selfloop), std::invalid_argument);
    std::istringstream malformed("a\n");
    REQUIRE_THROWS_AS(read_edge_list(malformed), std::invalid_argument);
}

TEST_CASE("threshold file") {
    std::istringstream in("0 1\n1 2\n2 1\n");
    std::istringstream graph_in("0 1\n1 2\n");
    LabeledGraph lg = read_edge_list(graph_in);
    ThresholdAssignment tau = read_thresholds(in, lg);
    REQUIRE(tau.tau == std::vector<int>{1, 2, 1});

    std::istringstream incomplete("0 1\n");
    REQUIRE_THROWS_AS(read_thresholds(incomplete, lg), std::invalid_argument);
}

TEST_CASE("schedule round trip") {
    std::istringstream graph_in("a b\nb c\n");
    LabeledGraph lg = read_edge_list(graph_in);
    Schedule sched = make_schedule({{lg.require_id("a"), lg.require_id("c")}, {}, {}});
    std::ostringstream out;
    write_schedule(out, sched, &lg.labels);
    REQUIRE(out.str() == "0: a c\n1:\n2:\n");
    std::istringstream back(out.str());
    Schedule parsed = read_schedule(back, lg);
    REQUIRE(parsed.sets == sched.sets);
}

TEST_CASE("schedule parse errors") {
    std::istringstream graph_in("a b\n");
    LabeledGraph lg = read_edge_list(graph_in);
    std::istringstream no_colon("0 a\n");
    REQUIRE_THROWS_AS(read_schedule(no_colon, lg), std::invalid_argument);
    std::istringstream out_of_order("1: a\n");
    REQUIRE_THROWS_AS(read_schedule(out_of_order, lg), std::invalid_argument);
    std::istringstream empty("");
    REQUIRE_THROWS_AS(read_schedule(empty, lg), std::invalid_argument);
}

TEST_CASE("write_edge_list emits the comment header") {
    Graph g = Graph::from_edges(3, {{0, 1}, {1, 2}});
    std::ostringstream out;
    write_edge_list(out, g, "gen path n=3");
    REQUIRE(out.str() == "# gen path n=3\n0 1\n1 2\n");
}
