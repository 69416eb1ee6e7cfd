#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sgcol/structure.hpp"
#include "test_util.hpp"

using namespace sgcol;
using namespace testutil;

TEST_CASE("sharpness family construction") {
    SignedGraph g1 = construct_sharpness_graph(1);
    CHECK(g1.vertex_count() == 1);
    CHECK(g1.edge_count() == 0);

    SignedGraph g2 = construct_sharpness_graph(2);
    CHECK(g2.vertex_count() == 4);
    REQUIRE(g2.edge_count() == 4);
    CHECK(g2.edge(0) == SignedEdge{0, 1, Sign::Plus});   // positive block
    CHECK(g2.edge(1) == SignedEdge{2, 3, Sign::Minus});  // negative block
    CHECK(g2.edge(2) == SignedEdge{0, 3, Sign::Plus});   // non-corresponding cross pair
    CHECK(g2.edge(3) == SignedEdge{1, 2, Sign::Plus});
    CHECK(!g2.adjacent(0, 2));  // corresponding vertices stay apart
    CHECK(!g2.adjacent(1, 3));

    SignedGraph g3 = construct_sharpness_graph(3);
    CHECK(g3.vertex_count() == 9);
    CHECK(g3.edge_count() == 27);  // 3 blocks of 3 edges plus 3 * 6 cross edges

    CHECK_THROWS_AS(construct_sharpness_graph(0), InvalidArgumentError);
}

TEST_CASE("sharpness family chromatic numbers") {
    SignedGraph g2 = construct_sharpness_graph(2);
    CHECK(chromatic_number(g2).chi == 3);
    CHECK(oracle::chi(g2) == 3);
    CHECK(oracle::chi_unsigned(g2) == 2);
}

TEST_CASE("vertex forest partition colouring") {
    SignedGraph tree = path_graph(5, -1);
    Colouring phi = colour_from_vertex_forest_partition(
        tree, VertexForestPartition{{{0, 1, 2, 3, 4}}});
    CHECK(!check_proper(tree, phi).has_value());
    for (int c : phi) CHECK(std::abs(c) == 1);

    SignedGraph c4 = cycle_graph(4, {-1, 1, -1, 1});
    phi = colour_from_vertex_forest_partition(c4, VertexForestPartition{{{0}, {1, 2, 3}}});
    CHECK(!check_proper(c4, phi).has_value());
    CHECK(colouring_within(phi, 4));

    SignedGraph k4 = complete_graph(4, +1);
    phi = colour_from_vertex_forest_partition(k4, VertexForestPartition{{{0, 1}, {2, 3}}});
    CHECK(!check_proper(k4, phi).has_value());
    CHECK(colouring_within(phi, 4));

    CHECK_THROWS_AS(
        colour_from_vertex_forest_partition(k4, VertexForestPartition{{{0, 1, 2}, {3}}}),
        InvalidPartitionError);  // a triangle is not a forest
    CHECK_THROWS_AS(colour_from_vertex_forest_partition(k4, VertexForestPartition{{{0, 1}}}),
                    InvalidPartitionError);  // not a cover
    CHECK_THROWS_AS(
        colour_from_vertex_forest_partition(k4, VertexForestPartition{{{0, 1}, {1, 2, 3}}}),
        InvalidPartitionError);  // overlap
}

TEST_CASE("two edge forests colouring") {
    SignedGraph c4 = cycle_graph(4, {1, -1, 1, -1});
    Colouring phi = colour_from_two_edge_forests(c4, EdgeForestPair{{0, 2}, {1, 3}});
    CHECK(!check_proper(c4, phi).has_value());
    for (int c : phi) CHECK((std::abs(c) == 1 || std::abs(c) == 2));

    SignedGraph tree = path_graph(4, +1);
    phi = colour_from_two_edge_forests(tree, EdgeForestPair{{0, 1, 2}, {}});
    CHECK(!check_proper(tree, phi).has_value());
    for (int c : phi) CHECK(std::abs(c) == 1);

    // K4 as a spanning path plus the three remaining edges.
    SignedGraph k4 = make(4, {{0, 1, +1}, {1, 2, -1}, {2, 3, +1},
                              {0, 2, -1}, {0, 3, +1}, {1, 3, -1}});
    phi = colour_from_two_edge_forests(k4, EdgeForestPair{{0, 1, 2}, {3, 4, 5}});
    CHECK(!check_proper(k4, phi).has_value());
    CHECK(colouring_within(phi, 4));

    CHECK_THROWS_AS(colour_from_two_edge_forests(c4, EdgeForestPair{{0, 1, 2, 3}, {}}),
                    InvalidPartitionError);  // the circuit is not a forest
    CHECK_THROWS_AS(colour_from_two_edge_forests(c4, EdgeForestPair{{0, 1}, {1, 2, 3}}),
                    InvalidPartitionError);  // duplicate edge
    CHECK_THROWS_AS(colour_from_two_edge_forests(c4, EdgeForestPair{{0, 1}, {3}}),
                    InvalidPartitionError);  // not a cover
}

TEST_CASE("acyclic colouring transformation") {
    // Two acyclic colours on a forest collapse to one absolute value.
    SignedGraph tree = path_graph(4, -1);
    Colouring phi = colour_from_acyclic(tree, AcyclicColouring{{1, 2, 1, 2}});
    CHECK(!check_proper(tree, phi).has_value());
    for (int c : phi) CHECK(std::abs(c) == 1);

    SignedGraph c4 = cycle_graph(4, {1, 1, -1, 1});
    phi = colour_from_acyclic(c4, AcyclicColouring{{1, 2, 1, 3}});
    CHECK(!check_proper(c4, phi).has_value());
    CHECK(colouring_within(phi, 3));
    CHECK(std::count(phi.begin(), phi.end(), 0) == 1);

    SignedGraph k4 = complete_graph(4, -1);
    phi = colour_from_acyclic(k4, AcyclicColouring{{1, 2, 3, 4}});
    CHECK(!check_proper(k4, phi).has_value());
    CHECK(colouring_within(phi, 4));

    CHECK_THROWS_AS(colour_from_acyclic(c4, AcyclicColouring{{1, 2, 1, 2}}), NotAcyclicError);
    CHECK_THROWS_AS(colour_from_acyclic(c4, AcyclicColouring{{1, 1, 2, 3}}), NotAcyclicError);
    CHECK_THROWS_AS(colour_from_acyclic(c4, AcyclicColouring{{1, 2, 1}}), NotAcyclicError);
}

TEST_CASE("brute-force acyclic colouring") {
    SignedGraph k4 = complete_graph(4, +1);
    auto a4 = brute_acyclic_colouring(k4, 4);
    REQUIRE(a4.has_value());
    validate_acyclic_colouring(k4, *a4);

    CHECK(!brute_acyclic_colouring(cycle_graph(4, +1), 2).has_value());

    auto c5 = brute_acyclic_colouring(cycle_graph(5, -1), 3);
    REQUIRE(c5.has_value());
    validate_acyclic_colouring(cycle_graph(5, -1), *c5);

    CHECK_THROWS_AS(brute_acyclic_colouring(SignedGraph(15, {}), 2), TooLargeError);
    CHECK(brute_acyclic_colouring(SignedGraph(15, {}), 2, 20).has_value());
}

TEST_CASE("independent set plus forest colouring") {
    SignedGraph c5 = cycle_graph(5, {1, -1, 1, 1, -1});
    Colouring phi = colour_from_independent_forest_partition(
        c5, IndependentForestPartition{{0}, {1, 2, 3, 4}});
    CHECK(!check_proper(c5, phi).has_value());
    CHECK(colouring_within(phi, 3));
    CHECK(phi[0] == 0);

    SignedGraph edgeless(3, {});
    phi = colour_from_independent_forest_partition(edgeless,
                                                   IndependentForestPartition{{0, 1, 2}, {}});
    CHECK(phi == Colouring{0, 0, 0});

    SignedGraph tree = path_graph(4, +1);
    phi = colour_from_independent_forest_partition(tree,
                                                   IndependentForestPartition{{}, {0, 1, 2, 3}});
    CHECK(!check_proper(tree, phi).has_value());
    for (int c : phi) CHECK(std::abs(c) == 1);

    CHECK_THROWS_AS(colour_from_independent_forest_partition(
                        tree, IndependentForestPartition{{0, 1}, {2, 3}}),
                    InvalidPartitionError);  // 0-1 is an edge
    CHECK_THROWS_AS(colour_from_independent_forest_partition(
                        cycle_graph(3, +1), IndependentForestPartition{{}, {0, 1, 2}}),
                    InvalidPartitionError);  // triangle is no forest
}

TEST_CASE("partition searches") {
    auto c4_split = find_two_edge_forests(cycle_graph(4, +1));
    REQUIRE(c4_split.has_value());
    validate_edge_forest_pair(cycle_graph(4, +1), *c4_split);

    CHECK(!find_two_edge_forests(complete_graph(5, +1)).has_value());

    auto k4_parts = find_vertex_forest_partition(complete_graph(4, -1), 2);
    REQUIRE(k4_parts.has_value());
    validate_vertex_forest_partition(complete_graph(4, -1), *k4_parts);

    CHECK(!find_vertex_forest_partition(complete_graph(5, +1), 2).has_value());
    CHECK(find_vertex_forest_partition(complete_graph(5, +1), 3).has_value());

    auto c5_partition = find_independent_forest_partition(cycle_graph(5, +1));
    REQUIRE(c5_partition.has_value());
    validate_independent_forest_partition(cycle_graph(5, +1), *c5_partition);

    CHECK(!find_independent_forest_partition(complete_graph(4, +1)).has_value());

    CHECK_THROWS_AS(find_two_edge_forests(SignedGraph(15, {})), TooLargeError);
}

TEST_CASE("partition colourings stay proper on random inputs") {
    std::mt19937 rng(13001);
    for (int iteration = 0; iteration < 40; ++iteration) {
        SignedGraph g = random_graph(rng, 2 + iteration % 6, 0.45, false, false);
        if (auto forests = find_two_edge_forests(g)) {
            Colouring phi = colour_from_two_edge_forests(g, *forests);
            CHECK(!check_proper(g, phi).has_value());
            CHECK(colouring_within(phi, 4));
        }
        if (auto partition = find_vertex_forest_partition(g, 2)) {
            Colouring phi = colour_from_vertex_forest_partition(g, *partition);
            CHECK(!check_proper(g, phi).has_value());
            CHECK(colouring_within(phi, 4));
        }
        if (auto partition = find_independent_forest_partition(g)) {
            Colouring phi = colour_from_independent_forest_partition(g, *partition);
            CHECK(!check_proper(g, phi).has_value());
            CHECK(colouring_within(phi, 3));
        }
        if (auto acyclic = brute_acyclic_colouring(g, 4)) {
            Colouring phi = colour_from_acyclic(g, *acyclic);
            CHECK(!check_proper(g, phi).has_value());
            int used = *std::max_element(acyclic->values.begin(), acyclic->values.end());
            CHECK(colouring_within(phi, used));
        }
    }
}
