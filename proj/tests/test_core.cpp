#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "sgcol/graph.hpp"
#include "test_util.hpp"

using namespace sgcol;
using namespace testutil;

namespace {

// A balance witness must replay: the switch turns every edge positive,
// the circuit multiplies to -1 and closes up.
void check_witness(const SignedGraph& g, const BalanceReport& report) {
    if (report.balanced) {
        SignedGraph switched_graph = switched(g, report.witness_switch);
        for (const SignedEdge& e : switched_graph.edges()) {
            if (!e.is_loop()) CHECK(e.sign == Sign::Plus);
        }
    } else {
        REQUIRE(!report.witness_circuit.empty());
        CHECK(oracle::circuit_sign_product(g, report.witness_circuit) == -1);
        std::map<int, int> endpoint_count;
        for (int e : report.witness_circuit) {
            endpoint_count[g.edge(e).u] += 1;
            endpoint_count[g.edge(e).v] += 1;
        }
        for (const auto& [vertex, count] : endpoint_count) CHECK(count % 2 == 0);
    }
}

}  // namespace

TEST_CASE("graph construction") {
    SignedGraph triangle = make(3, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}});
    CHECK(triangle.vertex_count() == 3);
    CHECK(triangle.edge_count() == 3);
    CHECK(triangle.max_degree() == 2);
    CHECK(triangle.is_simple());

    CHECK_THROWS_AS(make(1, {{0, 0, +1}}), PositiveLoopError);
    CHECK_THROWS_AS(make(2, {{0, 2, +1}}), VertexRangeError);

    SignedGraph parallel = make(2, {{0, 1, +1}, {0, 1, -1}});
    CHECK(parallel.max_degree() == 2);
    CHECK(parallel.has_parallel_edges());
    CHECK(!parallel.is_simple());

    SignedGraph loop = make(1, {{0, 0, -1}});
    CHECK(loop.degree(0) == 2);
    CHECK(loop.max_degree() == 2);
    CHECK(loop.has_loop());
    CHECK(!loop.is_simple());
}

TEST_CASE("underlying views") {
    SignedGraph g = make(3, {{0, 1, -1}, {0, 1, +1}, {1, 1, -1}, {1, 2, -1}});
    SignedGraph simple = g.underlying_simple();
    CHECK(simple.edge_count() == 2);
    CHECK(simple.is_simple());
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(g.neighbour_set(1) == std::vector<VertexId>{0, 2});
    CHECK(complete_graph(4, +1).underlying_complete());
    CHECK(!g.underlying_complete());
}

TEST_CASE("switching a cut") {
    SignedGraph triangle = complete_graph(3, +1);
    SignedGraph s0 = switched(triangle, SwitchSet({0}));
    CHECK(s0.edge(0).sign == Sign::Minus);  // 0-1
    CHECK(s0.edge(1).sign == Sign::Minus);  // 0-2
    CHECK(s0.edge(2).sign == Sign::Plus);   // 1-2

    CHECK(switched(triangle, SwitchSet{}) == triangle);
    CHECK(switched(triangle, SwitchSet({0, 1, 2})) == triangle);

    SignedGraph loop = make(1, {{0, 0, -1}});
    CHECK(switched(loop, SwitchSet({0})) == loop);
}

TEST_CASE("switch is an involution and composes by symmetric difference") {
    std::mt19937 rng(7101);
    for (int iteration = 0; iteration < 60; ++iteration) {
        SignedGraph g = random_graph(rng, 1 + iteration % 7, 0.5, true, true);
        SwitchSet s = random_switch_set(rng, g.vertex_count());
        SwitchSet t = random_switch_set(rng, g.vertex_count());
        CHECK(switched(switched(g, s), s) == g);
        CHECK(switched(switched(g, s), t) == switched(g, s.symmetric_difference(t)));
    }
}

TEST_CASE("switching preserves circuit sign products and balance") {
    std::mt19937 rng(7103);
    for (int iteration = 0; iteration < 40; ++iteration) {
        SignedGraph g = random_graph(rng, 3 + iteration % 3, 0.6, false, false);
        SwitchSet s = random_switch_set(rng, g.vertex_count());
        SignedGraph h = switched(g, s);
        for (const std::vector<int>& circuit : oracle::simple_circuits(g)) {
            CHECK(oracle::circuit_sign_product(g, circuit) ==
                  oracle::circuit_sign_product(h, circuit));
        }
        CHECK(is_balanced(g).balanced == is_balanced(h).balanced);
    }
    // A parallel pair is a circuit of length two.
    SignedGraph pair = make(2, {{0, 1, +1}, {0, 1, -1}});
    SignedGraph flipped = switched(pair, SwitchSet({0}));
    CHECK(sign_value(pair.edge(0).sign) * sign_value(pair.edge(1).sign) ==
          sign_value(flipped.edge(0).sign) * sign_value(flipped.edge(1).sign));
}

TEST_CASE("balance detection with replayable witnesses") {
    BalanceReport all_positive = is_balanced(complete_graph(4, +1));
    CHECK(all_positive.balanced);
    CHECK(all_positive.witness_switch.empty());

    std::mt19937 rng(7105);
    for (int iteration = 0; iteration < 30; ++iteration) {
        // Any forest is balanced whatever the signature.
        int n = 2 + iteration % 6;
        std::vector<SignedEdge> edges;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int v = 1; v < n; ++v) {
            std::uniform_int_distribution<int> parent(0, v - 1);
            edges.push_back({parent(rng), v, coin(rng) < 0.5 ? Sign::Plus : Sign::Minus});
        }
        SignedGraph forest(n, std::move(edges));
        BalanceReport report = is_balanced(forest);
        CHECK(report.balanced);
        check_witness(forest, report);
    }

    SignedGraph odd_triangle = make(3, {{0, 1, -1}, {1, 2, +1}, {0, 2, +1}});
    BalanceReport unbalanced = is_balanced(odd_triangle);
    CHECK(!unbalanced.balanced);
    CHECK(unbalanced.witness_circuit.size() == 3);
    check_witness(odd_triangle, unbalanced);

    SignedGraph with_loop = make(2, {{0, 1, +1}, {1, 1, -1}});
    BalanceReport loop_report = is_balanced(with_loop);
    CHECK(!loop_report.balanced);
    CHECK(loop_report.witness_circuit == std::vector<int>{1});

    for (int iteration = 0; iteration < 60; ++iteration) {
        SignedGraph g = random_graph(rng, 1 + iteration % 6, 0.5, true, true);
        BalanceReport report = is_balanced(g);
        CHECK(report.balanced == oracle::balanced(g));
        check_witness(g, report);
    }
}

TEST_CASE("antibalance") {
    CHECK(is_antibalanced(complete_graph(5, -1)));
    CHECK(!is_antibalanced(cycle_graph(5, +1)));
    CHECK(is_antibalanced(cycle_graph(4, +1)));
    CHECK(is_antibalanced(make(1, {{0, 0, -1}})));

    std::mt19937 rng(7107);
    for (int iteration = 0; iteration < 80; ++iteration) {
        SignedGraph g = random_graph(rng, 1 + iteration % 6, 0.5, true, true);
        CHECK(is_antibalanced(g) == oracle::antibalanced(g));
        if (!g.has_loop()) {
            CHECK(is_antibalanced(g) == is_balanced(negated(g)).balanced);
        }
    }
}

TEST_CASE("negating a negative loop is rejected") {
    CHECK_THROWS_AS(negated(make(1, {{0, 0, -1}})), PositiveLoopError);
}

TEST_CASE("switching equivalence") {
    std::mt19937 rng(7109);
    for (int iteration = 0; iteration < 50; ++iteration) {
        SignedGraph g = random_graph(rng, 1 + iteration % 6, 0.5, true, true);
        SwitchSet s = random_switch_set(rng, g.vertex_count());
        CHECK(switching_equivalent(g, switched(g, s)));
    }

    CHECK(!switching_equivalent(complete_graph(3, +1),
                                make(3, {{0, 1, -1}, {0, 2, +1}, {1, 2, +1}})));

    // Two non-adjacent negative edges on a four-circuit switch away.
    SignedGraph c4_two_negative = make(4, {{0, 1, -1}, {1, 2, +1}, {2, 3, -1}, {3, 0, +1}});
    CHECK(switching_equivalent(cycle_graph(4, +1), c4_two_negative));

    SignedGraph pair_mixed = make(2, {{0, 1, +1}, {0, 1, -1}});
    SignedGraph pair_mixed_swapped = make(2, {{0, 1, -1}, {0, 1, +1}});
    SignedGraph pair_plus = make(2, {{0, 1, +1}, {0, 1, +1}});
    SignedGraph pair_minus = make(2, {{0, 1, -1}, {0, 1, -1}});
    CHECK(switching_equivalent(pair_mixed, pair_mixed_swapped));
    CHECK(!switching_equivalent(pair_mixed, pair_plus));
    CHECK(switching_equivalent(pair_plus, pair_minus));

    CHECK_THROWS_AS(switching_equivalent(complete_graph(3, +1), path_graph(3, +1)),
                    UnderlyingMismatchError);
    CHECK_THROWS_AS(switching_equivalent(complete_graph(3, +1), complete_graph(4, +1)),
                    UnderlyingMismatchError);
}

TEST_CASE("induced subgraphs relabel consistently") {
    SignedGraph g = make(5, {{0, 1, +1}, {1, 2, -1}, {2, 3, +1}, {3, 4, -1}, {4, 0, +1}});
    InducedSubgraph sub = induced_subgraph(g, {4, 1, 2});
    CHECK(sub.original == std::vector<VertexId>{1, 2, 4});
    CHECK(sub.graph.vertex_count() == 3);
    REQUIRE(sub.graph.edge_count() == 1);
    CHECK(sub.graph.edge(0) == SignedEdge{0, 1, Sign::Minus});
}
