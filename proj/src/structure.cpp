#include "sgcol/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace sgcol {

namespace {

struct RollbackUnionFind {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<std::pair<int, int>> history;  // (absorbed root, absorbing root)

    explicit RollbackUnionFind(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
        history.emplace_back(b, a);
        return true;
    }

    std::size_t mark() const { return history.size(); }

    void rollback(std::size_t mark) {
        while (history.size() > mark) {
            auto [child, root] = history.back();
            history.pop_back();
            parent[static_cast<std::size_t>(child)] = child;
            size[static_cast<std::size_t>(root)] -= size[static_cast<std::size_t>(child)];
        }
    }
};

bool edges_acyclic(const SignedGraph& g, const std::vector<int>& edge_ids) {
    RollbackUnionFind uf(g.vertex_count());
    for (int e : edge_ids) {
        const SignedEdge& edge = g.edge(e);
        if (edge.is_loop() || !uf.unite(edge.u, edge.v)) return false;
    }
    return true;
}

void require_simple(const SignedGraph& g) {
    if (!g.is_simple()) throw NotSimpleError("graph must be simple");
}

std::vector<int> edges_within(const SignedGraph& g, const std::vector<char>& member) {
    std::vector<int> ids;
    for (int e = 0; e < g.edge_count(); ++e) {
        const SignedEdge& edge = g.edge(e);
        if (member[static_cast<std::size_t>(edge.u)] && member[static_cast<std::size_t>(edge.v)]) {
            ids.push_back(e);
        }
    }
    return ids;
}

// Switching set that turns the given forest edges all-negative. Each
// forest component is rooted at its lowest vertex and the switch flags
// propagate outward: an edge flips exactly when its endpoints disagree.
std::vector<VertexId> forest_negative_switch(const SignedGraph& g,
                                             const std::vector<int>& forest_edges) {
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<VertexId, Sign>>> adj(static_cast<std::size_t>(n));
    std::vector<char> touched(static_cast<std::size_t>(n), 0);
    for (int e : forest_edges) {
        const SignedEdge& edge = g.edge(e);
        adj[static_cast<std::size_t>(edge.u)].emplace_back(edge.v, edge.sign);
        adj[static_cast<std::size_t>(edge.v)].emplace_back(edge.u, edge.sign);
        touched[static_cast<std::size_t>(edge.u)] = 1;
        touched[static_cast<std::size_t>(edge.v)] = 1;
    }
    std::vector<int> flag(static_cast<std::size_t>(n), -1);
    std::vector<VertexId> switch_at;
    for (VertexId root = 0; root < n; ++root) {
        if (!touched[static_cast<std::size_t>(root)] || flag[static_cast<std::size_t>(root)] != -1) {
            continue;
        }
        flag[static_cast<std::size_t>(root)] = 0;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (auto [w, sign] : adj[static_cast<std::size_t>(v)]) {
                if (flag[static_cast<std::size_t>(w)] != -1) continue;
                flag[static_cast<std::size_t>(w)] =
                    flag[static_cast<std::size_t>(v)] ^ (sign == Sign::Plus ? 1 : 0);
                queue.push(w);
            }
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (flag[static_cast<std::size_t>(v)] == 1) switch_at.push_back(v);
    }
    return switch_at;
}

void verify_output(const SignedGraph& g, const Colouring& phi, int palette) {
    if (check_proper(g, phi)) {
        throw InternalBoundError("partition colouring failed verification");
    }
    if (!colouring_within(phi, palette)) {
        throw InternalBoundError("partition colouring left its palette");
    }
}

std::vector<char> cover_flags(const SignedGraph& g, const std::vector<VertexId>& vertices,
                              const char* what) {
    std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : vertices) {
        if (v < 0 || v >= g.vertex_count()) {
            throw InvalidPartitionError(std::string(what) + ": vertex out of range");
        }
        if (member[static_cast<std::size_t>(v)]) {
            throw InvalidPartitionError(std::string(what) + ": vertex repeated");
        }
        member[static_cast<std::size_t>(v)] = 1;
    }
    return member;
}

}  // namespace

SignedGraph construct_sharpness_graph(int n) {
    if (n < 1) throw InvalidArgumentError("block size must be at least 1");
    auto index = [n](int copy, int slot) { return copy * n + slot; };  // both 0-based
    std::vector<SignedEdge> edges;
    for (int copy = 0; copy < n; ++copy) {
        Sign sign = copy == 0 ? Sign::Plus : Sign::Minus;
        for (int j = 0; j < n; ++j) {
            for (int l = j + 1; l < n; ++l) {
                edges.push_back({index(copy, j), index(copy, l), sign});
            }
        }
    }
    for (int copy = 0; copy < n; ++copy) {
        for (int other = copy + 1; other < n; ++other) {
            for (int j = 0; j < n; ++j) {
                for (int l = 0; l < n; ++l) {
                    if (j == l) continue;  // corresponding vertices stay non-adjacent
                    edges.push_back({index(copy, j), index(other, l), Sign::Plus});
                }
            }
        }
    }
    return SignedGraph(n * n, std::move(edges));
}

void validate_vertex_forest_partition(const SignedGraph& g, const VertexForestPartition& p) {
    std::vector<int> part_of(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(p.parts.size()); ++i) {
        for (VertexId v : p.parts[static_cast<std::size_t>(i)]) {
            if (v < 0 || v >= g.vertex_count()) {
                throw InvalidPartitionError("partition vertex out of range");
            }
            if (part_of[static_cast<std::size_t>(v)] != -1) {
                throw InvalidPartitionError("partition parts overlap");
            }
            part_of[static_cast<std::size_t>(v)] = i;
        }
    }
    if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end()) {
        throw InvalidPartitionError("partition does not cover every vertex");
    }
    for (int i = 0; i < static_cast<int>(p.parts.size()); ++i) {
        std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
        for (VertexId v : p.parts[static_cast<std::size_t>(i)]) member[static_cast<std::size_t>(v)] = 1;
        if (!edges_acyclic(g, edges_within(g, member))) {
            throw InvalidPartitionError("part " + std::to_string(i + 1) + " induces a cycle");
        }
    }
}

Colouring colour_from_vertex_forest_partition(const SignedGraph& g,
                                              const VertexForestPartition& p) {
    require_simple(g);
    validate_vertex_forest_partition(g, p);
    std::vector<VertexId> switch_at;
    Colouring psi(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int i = 0; i < static_cast<int>(p.parts.size()); ++i) {
        std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
        for (VertexId v : p.parts[static_cast<std::size_t>(i)]) {
            member[static_cast<std::size_t>(v)] = 1;
            psi[static_cast<std::size_t>(v)] = i + 1;
        }
        std::vector<VertexId> flips = forest_negative_switch(g, edges_within(g, member));
        switch_at.insert(switch_at.end(), flips.begin(), flips.end());
    }
    SwitchSet s(std::move(switch_at));
    Colouring phi = switch_colouring(std::move(psi), s);
    verify_output(g, phi, 2 * static_cast<int>(p.parts.size()));
    return phi;
}

void validate_edge_forest_pair(const SignedGraph& g, const EdgeForestPair& p) {
    std::vector<char> side(static_cast<std::size_t>(g.edge_count()), 0);
    auto mark = [&](const std::vector<int>& ids, char which) {
        for (int e : ids) {
            if (e < 0 || e >= g.edge_count()) {
                throw InvalidPartitionError("edge index out of range");
            }
            if (side[static_cast<std::size_t>(e)] != 0) {
                throw InvalidPartitionError("edge assigned twice");
            }
            side[static_cast<std::size_t>(e)] = which;
        }
    };
    mark(p.forest1, 1);
    mark(p.forest2, 2);
    if (std::find(side.begin(), side.end(), 0) != side.end()) {
        throw InvalidPartitionError("edge pair does not cover every edge");
    }
    if (!edges_acyclic(g, p.forest1) || !edges_acyclic(g, p.forest2)) {
        throw InvalidPartitionError("edge set contains a cycle");
    }
}

Colouring colour_from_two_edge_forests(const SignedGraph& g, const EdgeForestPair& p) {
    require_simple(g);
    validate_edge_forest_pair(g, p);
    SwitchSet s(forest_negative_switch(g, p.forest1));

    // Proper 2-colouring of the second forest with {1, 2}.
    int n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (int e : p.forest2) {
        const SignedEdge& edge = g.edge(e);
        adj[static_cast<std::size_t>(edge.u)].push_back(edge.v);
        adj[static_cast<std::size_t>(edge.v)].push_back(edge.u);
    }
    Colouring psi(static_cast<std::size_t>(n), 0);
    for (VertexId root = 0; root < n; ++root) {
        if (psi[static_cast<std::size_t>(root)] != 0) continue;
        psi[static_cast<std::size_t>(root)] = 1;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (VertexId w : adj[static_cast<std::size_t>(v)]) {
                if (psi[static_cast<std::size_t>(w)] == 0) {
                    psi[static_cast<std::size_t>(w)] = 3 - psi[static_cast<std::size_t>(v)];
                    queue.push(w);
                }
            }
        }
    }
    Colouring phi = switch_colouring(std::move(psi), s);
    verify_output(g, phi, 4);
    return phi;
}

void validate_acyclic_colouring(const SignedGraph& g, const AcyclicColouring& a) {
    if (static_cast<int>(a.values.size()) != g.vertex_count()) {
        throw NotAcyclicError("colouring size does not match vertex count");
    }
    for (int c : a.values) {
        if (c < 1) throw NotAcyclicError("acyclic colours must be positive");
    }
    for (const SignedEdge& e : g.edges()) {
        if (a.values[static_cast<std::size_t>(e.u)] == a.values[static_cast<std::size_t>(e.v)]) {
            throw NotAcyclicError("colouring is not proper on the underlying graph");
        }
    }
    int max_colour = 0;
    for (int c : a.values) max_colour = std::max(max_colour, c);
    for (int c = 1; c <= max_colour; ++c) {
        for (int d = c + 1; d <= max_colour; ++d) {
            std::vector<int> ids;
            for (int e = 0; e < g.edge_count(); ++e) {
                const SignedEdge& edge = g.edge(e);
                int cu = a.values[static_cast<std::size_t>(edge.u)];
                int cv = a.values[static_cast<std::size_t>(edge.v)];
                if ((cu == c || cu == d) && (cv == c || cv == d)) ids.push_back(e);
            }
            if (!edges_acyclic(g, ids)) {
                throw NotAcyclicError("two colour classes induce a cycle");
            }
        }
    }
}

Colouring colour_from_acyclic(const SignedGraph& g, const AcyclicColouring& a) {
    require_simple(g);
    validate_acyclic_colouring(g, a);
    int n_colours = 0;
    for (int c : a.values) n_colours = std::max(n_colours, c);
    if (n_colours == 0) return Colouring{};
    int pairs = n_colours / 2;

    Colouring psi(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> switch_at;
    for (int i = 1; i <= pairs; ++i) {
        std::vector<char> member(static_cast<std::size_t>(g.vertex_count()), 0);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            int c = a.values[static_cast<std::size_t>(v)];
            if (c == 2 * i - 1 || c == 2 * i) {
                member[static_cast<std::size_t>(v)] = 1;
                psi[static_cast<std::size_t>(v)] = i;
            }
        }
        std::vector<VertexId> flips = forest_negative_switch(g, edges_within(g, member));
        switch_at.insert(switch_at.end(), flips.begin(), flips.end());
    }
    // An odd leftover class is an independent set; it takes colour 0.
    SwitchSet s(std::move(switch_at));
    Colouring phi = switch_colouring(std::move(psi), s);
    verify_output(g, phi, n_colours);
    return phi;
}

void validate_independent_forest_partition(const SignedGraph& g,
                                           const IndependentForestPartition& p) {
    std::vector<char> in_u = cover_flags(g, p.independent, "independent set");
    for (VertexId v : p.forest) {
        if (v < 0 || v >= g.vertex_count()) {
            throw InvalidPartitionError("forest vertex out of range");
        }
        if (in_u[static_cast<std::size_t>(v)]) {
            throw InvalidPartitionError("independent and forest parts overlap");
        }
        in_u[static_cast<std::size_t>(v)] = 1;
    }
    if (std::find(in_u.begin(), in_u.end(), 0) != in_u.end()) {
        throw InvalidPartitionError("partition does not cover every vertex");
    }
    std::vector<char> u_member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : p.independent) u_member[static_cast<std::size_t>(v)] = 1;
    if (!edges_within(g, u_member).empty()) {
        throw InvalidPartitionError("independent set spans an edge");
    }
    std::vector<char> w_member(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : p.forest) w_member[static_cast<std::size_t>(v)] = 1;
    if (!edges_acyclic(g, edges_within(g, w_member))) {
        throw InvalidPartitionError("forest part induces a cycle");
    }
}

Colouring colour_from_independent_forest_partition(const SignedGraph& g,
                                                   const IndependentForestPartition& p) {
    require_simple(g);
    validate_independent_forest_partition(g, p);
    std::vector<char> w_member(static_cast<std::size_t>(g.vertex_count()), 0);
    Colouring psi(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : p.forest) {
        w_member[static_cast<std::size_t>(v)] = 1;
        psi[static_cast<std::size_t>(v)] = 1;
    }
    SwitchSet s(forest_negative_switch(g, edges_within(g, w_member)));
    Colouring phi = switch_colouring(std::move(psi), s);
    verify_output(g, phi, 3);
    return phi;
}

namespace {

void require_within_cap(const SignedGraph& g, int cap) {
    if (g.vertex_count() > cap) {
        throw TooLargeError("graph exceeds the brute-force cap of " + std::to_string(cap) +
                            " vertices");
    }
}

}  // namespace

std::optional<AcyclicColouring> brute_acyclic_colouring(const SignedGraph& g, int n, int cap) {
    require_simple(g);
    require_within_cap(g, cap);
    if (n < 1) throw InvalidArgumentError("colour count must be positive");
    int vertex_count = g.vertex_count();
    if (vertex_count == 0) return AcyclicColouring{{}};

    std::vector<VertexId> order = degeneracy_ordering(g).order;
    std::vector<int> values(static_cast<std::size_t>(vertex_count), 0);

    // A fresh bicoloured cycle must pass through the newest vertex, so
    // checking the pairs that involve its colour suffices.
    auto pair_acyclic = [&](int c, int d) {
        RollbackUnionFind uf(vertex_count);
        for (const SignedEdge& e : g.edges()) {
            int cu = values[static_cast<std::size_t>(e.u)];
            int cv = values[static_cast<std::size_t>(e.v)];
            if ((cu == c || cu == d) && (cv == c || cv == d)) {
                if (!uf.unite(e.u, e.v)) return false;
            }
        }
        return true;
    };

    auto search = [&](auto&& self, int pos, int max_used) -> bool {
        if (pos == vertex_count) return true;
        VertexId v = order[static_cast<std::size_t>(pos)];
        int limit = std::min(n, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            for (VertexId w : g.neighbour_set(v)) {
                if (values[static_cast<std::size_t>(w)] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            values[static_cast<std::size_t>(v)] = c;
            bool acyclic = true;
            for (int d = 1; d <= std::max(max_used, c); ++d) {
                if (d != c && !pair_acyclic(c, d)) {
                    acyclic = false;
                    break;
                }
            }
            if (acyclic && self(self, pos + 1, std::max(max_used, c))) return true;
            values[static_cast<std::size_t>(v)] = 0;
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;
    AcyclicColouring result{std::move(values)};
    validate_acyclic_colouring(g, result);
    return result;
}

std::optional<EdgeForestPair> find_two_edge_forests(const SignedGraph& g, int cap) {
    require_simple(g);
    require_within_cap(g, cap);
    int m = g.edge_count();
    std::vector<char> side(static_cast<std::size_t>(m), 0);
    RollbackUnionFind uf1(g.vertex_count());
    RollbackUnionFind uf2(g.vertex_count());

    auto search = [&](auto&& self, int e) -> bool {
        if (e == m) return true;
        const SignedEdge& edge = g.edge(e);
        // Swapping the two forests is a symmetry; pin the first edge.
        for (char which = 1; which <= (e == 0 ? 1 : 2); ++which) {
            RollbackUnionFind& uf = which == 1 ? uf1 : uf2;
            std::size_t mark = uf.mark();
            if (uf.unite(edge.u, edge.v)) {
                side[static_cast<std::size_t>(e)] = which;
                if (self(self, e + 1)) return true;
                side[static_cast<std::size_t>(e)] = 0;
                uf.rollback(mark);
            }
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    EdgeForestPair result;
    for (int e = 0; e < m; ++e) {
        (side[static_cast<std::size_t>(e)] == 1 ? result.forest1 : result.forest2).push_back(e);
    }
    validate_edge_forest_pair(g, result);
    return result;
}

std::optional<VertexForestPartition> find_vertex_forest_partition(const SignedGraph& g, int parts,
                                                                  int cap) {
    require_simple(g);
    require_within_cap(g, cap);
    if (parts < 1) throw InvalidArgumentError("part count must be positive");
    int n = g.vertex_count();
    std::vector<int> part_of(static_cast<std::size_t>(n), 0);
    std::vector<RollbackUnionFind> forests(static_cast<std::size_t>(parts),
                                           RollbackUnionFind(n));

    auto search = [&](auto&& self, VertexId v, int max_used) -> bool {
        if (v == n) return true;
        int limit = std::min(parts, max_used + 1);
        for (int p = 1; p <= limit; ++p) {
            RollbackUnionFind& uf = forests[static_cast<std::size_t>(p - 1)];
            std::size_t mark = uf.mark();
            bool ok = true;
            for (VertexId w : g.neighbour_set(v)) {
                if (w < v && part_of[static_cast<std::size_t>(w)] == p && !uf.unite(v, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                part_of[static_cast<std::size_t>(v)] = p;
                if (self(self, v + 1, std::max(max_used, p))) return true;
                part_of[static_cast<std::size_t>(v)] = 0;
            }
            uf.rollback(mark);
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;
    VertexForestPartition result;
    result.parts.resize(static_cast<std::size_t>(parts));
    for (VertexId v = 0; v < n; ++v) {
        result.parts[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v)] - 1)].push_back(v);
    }
    validate_vertex_forest_partition(g, result);
    return result;
}

std::optional<IndependentForestPartition> find_independent_forest_partition(const SignedGraph& g,
                                                                            int cap) {
    require_simple(g);
    require_within_cap(g, cap);
    int n = g.vertex_count();
    std::vector<int> choice(static_cast<std::size_t>(n), 0);  // 1 = independent, 2 = forest
    RollbackUnionFind forest(n);

    auto search = [&](auto&& self, VertexId v) -> bool {
        if (v == n) return true;
        bool independent_ok = true;
        for (VertexId w : g.neighbour_set(v)) {
            if (w < v && choice[static_cast<std::size_t>(w)] == 1) {
                independent_ok = false;
                break;
            }
        }
        if (independent_ok) {
            choice[static_cast<std::size_t>(v)] = 1;
            if (self(self, v + 1)) return true;
        }
        std::size_t mark = forest.mark();
        bool forest_ok = true;
        for (VertexId w : g.neighbour_set(v)) {
            if (w < v && choice[static_cast<std::size_t>(w)] == 2 && !forest.unite(v, w)) {
                forest_ok = false;
                break;
            }
        }
        if (forest_ok) {
            choice[static_cast<std::size_t>(v)] = 2;
            if (self(self, v + 1)) return true;
        }
        forest.rollback(mark);
        choice[static_cast<std::size_t>(v)] = 0;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    IndependentForestPartition result;
    for (VertexId v = 0; v < n; ++v) {
        (choice[static_cast<std::size_t>(v)] == 1 ? result.independent : result.forest).push_back(v);
    }
    validate_independent_forest_partition(g, result);
    return result;
}

}  // namespace sgcol
