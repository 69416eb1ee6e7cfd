#pragma once

// Shared helpers for the test suites: tiny graph builders, seeded random
// instances, and brute-force oracles that stay independent of the library
// search paths they are used to check.

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"

namespace testutil {

using sgcol::Sign;
using sgcol::SignedEdge;
using sgcol::SignedGraph;
using sgcol::VertexId;

inline Sign sg_sign(int s) { return s > 0 ? Sign::Plus : Sign::Minus; }

inline SignedGraph make(int n, const std::vector<std::tuple<int, int, int>>& edges) {
    std::vector<SignedEdge> list;
    list.reserve(edges.size());
    for (const auto& [u, v, s] : edges) list.push_back({u, v, sg_sign(s)});
    return SignedGraph(n, std::move(list));
}

inline SignedGraph complete_graph(int n, int sign) {
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j, sg_sign(sign)});
    }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph cycle_graph(int n, const std::vector<int>& signs) {
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n, sg_sign(signs[static_cast<std::size_t>(i)])});
    }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph cycle_graph(int n, int sign) {
    return cycle_graph(n, std::vector<int>(static_cast<std::size_t>(n), sign));
}

inline SignedGraph path_graph(int n, int sign) {
    std::vector<SignedEdge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, sg_sign(sign)});
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph random_graph(std::mt19937& rng, int n, double density, bool allow_parallel,
                                bool allow_loops) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<SignedEdge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int copies = coin(rng) < density ? 1 : 0;
            if (allow_parallel && copies == 1 && coin(rng) < 0.3) copies = 2;
            for (int c = 0; c < copies; ++c) {
                edges.push_back({i, j, coin(rng) < 0.5 ? Sign::Plus : Sign::Minus});
            }
        }
        if (allow_loops && coin(rng) < 0.15) edges.push_back({i, i, Sign::Minus});
    }
    return SignedGraph(n, std::move(edges));
}

inline SignedGraph random_connected_simple(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> size(2, max_vertices);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    int n = size(rng);
    while (true) {
        double density = 0.2 + 0.6 * coin(rng);
        SignedGraph g = random_graph(rng, n, density, false, false);
        if (g.is_connected()) return g;
    }
}

inline sgcol::SwitchSet random_switch_set(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < n; ++v) {
        if (coin(rng) < 0.5) vertices.push_back(v);
    }
    return sgcol::SwitchSet(std::move(vertices));
}

namespace oracle {

// Exhaustive feasibility: every map V -> colour_set(n), checked against
// the properness definition edge by edge. No ordering heuristics, no
// pruning, no symmetry breaking.
inline bool feasible(const SignedGraph& g, int n) {
    int vertices = g.vertex_count();
    if (vertices == 0) return true;
    std::vector<int> palette = sgcol::colour_set(n);
    std::vector<std::size_t> pick(static_cast<std::size_t>(vertices), 0);
    while (true) {
        bool proper = true;
        for (const SignedEdge& e : g.edges()) {
            int cu = palette[pick[static_cast<std::size_t>(e.u)]];
            int cv = palette[pick[static_cast<std::size_t>(e.v)]];
            if (cu == sgcol::sign_value(e.sign) * cv) {
                proper = false;
                break;
            }
        }
        if (proper) return true;
        std::size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < palette.size()) break;
            pick[i] = 0;
        }
        if (i == pick.size()) return false;
    }
}

inline int chi(const SignedGraph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int n = 1;; ++n) {
        if (feasible(g, n)) return n;
    }
}

// Balance via potentials: theta with sign(uv) = theta(u)*theta(v) exists
// iff the graph is balanced; any loop (necessarily negative) refutes it.
inline bool balanced(const SignedGraph& g) {
    for (const SignedEdge& e : g.edges()) {
        if (e.is_loop()) return false;
    }
    int n = g.vertex_count();
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        bool ok = true;
        for (const SignedEdge& e : g.edges()) {
            int tu = (mask >> e.u) & 1 ? -1 : 1;
            int tv = (mask >> e.v) & 1 ? -1 : 1;
            if (sgcol::sign_value(e.sign) != tu * tv) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Antibalance via the two-set characterisation: within-set edges
// negative, cross edges positive. A negative loop is always consistent.
inline bool antibalanced(const SignedGraph& g) {
    int n = g.vertex_count();
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        bool ok = true;
        for (const SignedEdge& e : g.edges()) {
            if (e.is_loop()) continue;
            int tu = (mask >> e.u) & 1 ? -1 : 1;
            int tv = (mask >> e.v) & 1 ? -1 : 1;
            if (sgcol::sign_value(e.sign) != -tu * tv) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// Ordinary chromatic number of the underlying simple graph.
inline int chi_unsigned(const SignedGraph& g) {
    SignedGraph simple = g.underlying_simple();
    int vertices = simple.vertex_count();
    if (vertices == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> pick(static_cast<std::size_t>(vertices), 0);
        while (true) {
            bool proper = true;
            for (const SignedEdge& e : simple.edges()) {
                if (pick[static_cast<std::size_t>(e.u)] == pick[static_cast<std::size_t>(e.v)]) {
                    proper = false;
                    break;
                }
            }
            if (proper) return k;
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < k) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
        }
    }
}

// All simple circuits of a simple graph, as edge-index lists. Each cycle
// is produced once: the start is its minimum vertex and the walk begins
// toward the smaller of the two possible directions.
inline std::vector<std::vector<int>> simple_circuits(const SignedGraph& g) {
    std::vector<std::vector<int>> circuits;
    int n = g.vertex_count();
    std::vector<int> path_vertices;
    std::vector<int> path_edges;
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    auto extend = [&](auto&& self, int start, int current) -> void {
        for (const SignedGraph::IncidentEdge& ie : g.incident(current)) {
            int next = ie.to;
            if (next == start && path_vertices.size() >= 3) {
                if (path_vertices[1] < path_vertices.back()) {
                    path_edges.push_back(ie.edge_index);
                    circuits.push_back(path_edges);
                    path_edges.pop_back();
                }
                continue;
            }
            if (next <= start || used[static_cast<std::size_t>(next)]) continue;
            used[static_cast<std::size_t>(next)] = 1;
            path_vertices.push_back(next);
            path_edges.push_back(ie.edge_index);
            self(self, start, next);
            path_edges.pop_back();
            path_vertices.pop_back();
            used[static_cast<std::size_t>(next)] = 0;
        }
    };
    for (int start = 0; start < n; ++start) {
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<std::size_t>(start)] = 1;
        path_vertices = {start};
        path_edges.clear();
        extend(extend, start, start);
    }
    return circuits;
}

inline int circuit_sign_product(const SignedGraph& g, const std::vector<int>& edges) {
    int product = 1;
    for (int e : edges) product *= sgcol::sign_value(g.edge(e).sign);
    return product;
}

}  // namespace oracle

}  // namespace testutil
