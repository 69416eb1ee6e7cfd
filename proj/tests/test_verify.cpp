#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "sgcol/io.hpp"
#include "sgcol/verify.hpp"
#include "test_util.hpp"

using namespace sgcol;
using namespace testutil;

namespace {

std::vector<SignedGraph> collect(const EnumerationSpec& spec) {
    std::vector<SignedGraph> graphs;
    enumerate_signed_graphs(spec, [&](const SignedGraph& g) {
        graphs.push_back(g);
        return true;
    });
    return graphs;
}

}  // namespace

TEST_CASE("enumeration matches the hand list up to three vertices") {
    EnumerationSpec spec;
    spec.max_vertices = 3;
    spec.connected_only = true;
    spec.simple_only = true;
    std::vector<SignedGraph> graphs = collect(spec);

    std::vector<SignedGraph> expected = {
        SignedGraph(1, {}),
        make(2, {{0, 1, +1}}),
        make(3, {{0, 1, +1}, {0, 2, +1}}),
        make(3, {{0, 1, +1}, {1, 2, +1}}),
        make(3, {{0, 2, +1}, {1, 2, +1}}),
        make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, +1}}),
        make(3, {{0, 1, +1}, {0, 2, +1}, {1, 2, -1}}),
    };
    REQUIRE(graphs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(graphs[i] == expected[i]);
    }
    // One graph per switching class: distinct entries never switch into
    // one another.
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i + 1; j < graphs.size(); ++j) {
            if (graphs[i].vertex_count() != graphs[j].vertex_count()) continue;
            bool comparable = true;
            bool equivalent = false;
            try {
                equivalent = switching_equivalent(graphs[i], graphs[j]);
            } catch (const UnderlyingMismatchError&) {
                comparable = false;
            }
            if (comparable) CHECK(!equivalent);
        }
    }
}

TEST_CASE("enumeration counts") {
    EnumerationSpec two;
    two.max_vertices = 2;
    two.connected_only = true;
    two.simple_only = true;
    CHECK(collect(two).size() == 2);  // a vertex and a positive edge

    // Triangle underlying: balanced and unbalanced classes only.
    EnumerationSpec three;
    three.max_vertices = 3;
    three.connected_only = true;
    three.simple_only = true;
    int triangles = 0;
    for (const SignedGraph& g : collect(three)) {
        if (g.edge_count() == 3) ++triangles;
    }
    CHECK(triangles == 2);

    // Four-circuit underlying: again two classes.
    EnumerationSpec four;
    four.max_vertices = 4;
    four.connected_only = true;
    four.simple_only = true;
    int circuits = 0;
    for (const SignedGraph& g : collect(four)) {
        if (g.vertex_count() == 4 && g.edge_count() == 4) {
            bool circuit = true;
            for (VertexId v = 0; v < 4; ++v) circuit = circuit && g.degree(v) == 2;
            if (circuit) ++circuits;
        }
    }
    CHECK(circuits == 2 * 3);  // three labelled four-circuits, two classes each
}

TEST_CASE("multigraph universe") {
    EnumerationSpec spec;
    spec.max_vertices = 2;
    spec.connected_only = true;
    spec.simple_only = false;
    std::vector<SignedGraph> graphs = collect(spec);
    // K1; K2; double edge with ++ and +- co-tree signs.
    REQUIRE(graphs.size() == 4);
    CHECK(graphs[0] == SignedGraph(1, {}));
    CHECK(graphs[1] == make(2, {{0, 1, +1}}));
    CHECK(graphs[2] == make(2, {{0, 1, +1}, {0, 1, +1}}));
    CHECK(graphs[3] == make(2, {{0, 1, +1}, {0, 1, -1}}));
    for (const SignedGraph& g : graphs) CHECK(!g.has_loop());
}

TEST_CASE("enumeration respects filters and stops early") {
    EnumerationSpec spec;
    spec.max_vertices = 4;
    spec.connected_only = true;
    spec.simple_only = true;
    for (const SignedGraph& g : collect(spec)) {
        CHECK(g.is_connected());
        CHECK(g.is_simple());
    }
    long long seen = 0;
    long long emitted = enumerate_signed_graphs(spec, [&](const SignedGraph&) {
        ++seen;
        return seen < 5;
    });
    CHECK(emitted == 5);
    CHECK(seen == 5);
}

TEST_CASE("enumeration is reproducible") {
    EnumerationSpec spec;
    spec.max_vertices = 3;
    spec.simple_only = false;
    std::vector<SignedGraph> first = collect(spec);
    std::vector<SignedGraph> second = collect(spec);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) CHECK(first[i] == second[i]);
}

TEST_CASE("class count matches the cycle-space formula at four vertices") {
    // Independently: sum over labelled simple graphs on exactly four
    // vertices of 2^(m - n + c), the number of switching classes.
    int n = 4;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    long long expected = 0;
    for (int mask = 0; mask < (1 << pairs.size()); ++mask) {
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        int m = 0;
        int components = n;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (!(mask >> p & 1)) continue;
            ++m;
            int a = find(pairs[p].first);
            int b = find(pairs[p].second);
            if (a != b) {
                parent[static_cast<std::size_t>(a)] = b;
                --components;
            }
        }
        expected += 1LL << (m - n + components);
    }

    EnumerationSpec spec;
    spec.max_vertices = 4;
    long long emitted = 0;
    enumerate_signed_graphs(spec, [&](const SignedGraph& g) {
        if (g.vertex_count() == 4) ++emitted;
        return true;
    });
    CHECK(emitted == expected);
    CHECK(expected == 108);
}

TEST_CASE("the hard cap guards exhaustive runs") {
    EnumerationSpec spec;
    spec.max_vertices = 7;
    CHECK_THROWS_AS(collect(spec), CapExceededError);
    CHECK_THROWS_AS(verify_theorem("brooks", spec), CapExceededError);
}

TEST_CASE("theorem verification passes on small corpora") {
    EnumerationSpec four;
    four.max_vertices = 4;

    for (const std::string id :
         {"brooks", "bound_2chi", "antibalance", "gamma_identity", "degeneracy",
          "switching_invariance", "complete"}) {
        VerificationReport report = verify_theorem(id, four);
        CHECK(report.passed);
        CHECK(report.instances_checked > 0);
        CHECK(report.theorem_id == id);
    }

    VerificationReport sharpness = verify_theorem("sharpness", four);
    CHECK(sharpness.passed);
    CHECK(sharpness.instances_checked == 2);

    CHECK_THROWS_AS(verify_theorem("no_such_theorem", four), UnknownTheoremError);
}

TEST_CASE("parallel verification agrees with sequential") {
    EnumerationSpec spec;
    spec.max_vertices = 4;
    VerifyOptions two_jobs;
    two_jobs.jobs = 2;
    for (const std::string id : {"brooks", "gamma_identity"}) {
        VerificationReport sequential = verify_theorem(id, spec);
        VerificationReport parallel = verify_theorem(id, spec, two_jobs);
        CHECK(sequential.passed == parallel.passed);
        CHECK(sequential.instances_checked == parallel.instances_checked);
    }
}

TEST_CASE("planar conjecture harness") {
    std::string dir = std::filesystem::temp_directory_path().string();
    std::string good_path = dir + "/sgcol_test_planar_good.sg";
    std::string bad_path = dir + "/sgcol_test_planar_dense.sg";
    {
        std::ofstream out(good_path);
        out << render_graph(cycle_graph(5, {1, 1, -1, 1, -1}));
    }
    {
        std::ofstream out(bad_path);
        out << render_graph(complete_graph(6, +1));  // m > 3n-6
    }

    VerifyOptions options;
    options.planar_files = {good_path};
    VerificationReport report = verify_theorem("planar_conjecture", EnumerationSpec{}, options);
    CHECK(report.passed);
    CHECK(report.instances_checked == 1);

    options.planar_files = {good_path, bad_path};
    report = verify_theorem("planar_conjecture", EnumerationSpec{}, options);
    CHECK(!report.passed);
    REQUIRE(report.counterexample.has_value());
    CHECK(report.counterexample->details.find("edge bound") != std::string::npos);

    std::remove(good_path.c_str());
    std::remove(bad_path.c_str());
}

TEST_CASE("report rendering") {
    EnumerationSpec spec;
    spec.max_vertices = 3;
    VerificationReport report = verify_theorem("antibalance", spec);
    std::string text = render_report(report);
    CHECK(text.find("theorem=antibalance") != std::string::npos);
    CHECK(text.find("result=PASS") != std::string::npos);

    VerifyOptions logging;
    long long lines = 0;
    logging.instance_log = [&](const std::string&) { ++lines; };
    verify_theorem("antibalance", spec, logging);
    CHECK(lines == report.instances_checked);
}
