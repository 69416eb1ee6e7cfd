#include "sgcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace sgcol {

SwitchSet::SwitchSet(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

bool SwitchSet::contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

SwitchSet SwitchSet::symmetric_difference(const SwitchSet& other) const {
    std::vector<VertexId> result;
    std::set_symmetric_difference(vertices_.begin(), vertices_.end(),
                                  other.vertices_.begin(), other.vertices_.end(),
                                  std::back_inserter(result));
    return SwitchSet(std::move(result));
}

SignedGraph::SignedGraph(int vertex_count, std::vector<SignedEdge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 0) {
        throw InvalidArgumentError("vertex count must be nonnegative");
    }
    incident_.resize(static_cast<std::size_t>(n_));
    degree_.assign(static_cast<std::size_t>(n_), 0);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const SignedEdge& edge = edges_[static_cast<std::size_t>(e)];
        if (edge.u < 0 || edge.u >= n_ || edge.v < 0 || edge.v >= n_) {
            throw VertexRangeError("edge " + std::to_string(e) + " endpoint out of range");
        }
        if (edge.is_loop()) {
            if (edge.sign == Sign::Plus) {
                throw PositiveLoopError(edge.u);
            }
            incident_[static_cast<std::size_t>(edge.u)].push_back({edge.u, edge.sign, e});
            degree_[static_cast<std::size_t>(edge.u)] += 2;
        } else {
            incident_[static_cast<std::size_t>(edge.u)].push_back({edge.v, edge.sign, e});
            incident_[static_cast<std::size_t>(edge.v)].push_back({edge.u, edge.sign, e});
            degree_[static_cast<std::size_t>(edge.u)] += 1;
            degree_[static_cast<std::size_t>(edge.v)] += 1;
        }
    }
}

int SignedGraph::max_degree() const {
    int best = 0;
    for (int d : degree_) best = std::max(best, d);
    return best;
}

bool SignedGraph::has_loop() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const SignedEdge& e) { return e.is_loop(); });
}

bool SignedGraph::has_loop_at(VertexId v) const {
    for (const IncidentEdge& ie : incident(v)) {
        if (ie.to == v) return true;
    }
    return false;
}

bool SignedGraph::has_parallel_edges() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const SignedEdge& e : edges_) {
        if (!e.is_loop()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end();
}

bool SignedGraph::adjacent(VertexId u, VertexId v) const {
    for (const IncidentEdge& ie : incident(u)) {
        if (ie.to == v) return true;
    }
    return false;
}

std::vector<VertexId> SignedGraph::neighbour_set(VertexId v) const {
    std::vector<VertexId> result;
    for (const IncidentEdge& ie : incident(v)) {
        if (ie.to != v) result.push_back(ie.to);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<int> SignedGraph::component_ids() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    int next = 0;
    for (VertexId root = 0; root < n_; ++root) {
        if (comp[static_cast<std::size_t>(root)] != -1) continue;
        comp[static_cast<std::size_t>(root)] = next;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (const IncidentEdge& ie : incident(v)) {
                if (comp[static_cast<std::size_t>(ie.to)] == -1) {
                    comp[static_cast<std::size_t>(ie.to)] = next;
                    queue.push(ie.to);
                }
            }
        }
        ++next;
    }
    return comp;
}

bool SignedGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> comp = component_ids();
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

bool SignedGraph::underlying_complete() const {
    if (n_ <= 1) return true;
    for (VertexId u = 0; u < n_; ++u) {
        std::vector<VertexId> nb = neighbour_set(u);
        if (static_cast<int>(nb.size()) != n_ - 1) return false;
    }
    return true;
}

SignedGraph SignedGraph::underlying_simple() const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (const SignedEdge& e : edges_) {
        if (!e.is_loop()) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    std::vector<SignedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) edges.push_back({u, v, Sign::Plus});
    return SignedGraph(n_, std::move(edges));
}

namespace {

// Breadth-first spanning forest with per-vertex sign of the tree path to
// the component root. Components are rooted at their lowest vertex, roots
// taken in ascending order; neighbours scanned in edge insertion order.
struct ForestScan {
    std::vector<int> parent_vertex;
    std::vector<int> parent_edge;
    std::vector<int> depth;
    std::vector<signed char> theta;  // +1 / -1 relative to the root
    std::vector<char> in_tree;       // per edge
};

Sign effective_sign(Sign s, bool negate) { return negate ? opposite(s) : s; }

ForestScan scan_forest(const SignedGraph& g, bool negate) {
    int n = g.vertex_count();
    ForestScan scan;
    scan.parent_vertex.assign(static_cast<std::size_t>(n), -1);
    scan.parent_edge.assign(static_cast<std::size_t>(n), -1);
    scan.depth.assign(static_cast<std::size_t>(n), -1);
    scan.theta.assign(static_cast<std::size_t>(n), 0);
    scan.in_tree.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (VertexId root = 0; root < n; ++root) {
        if (scan.depth[static_cast<std::size_t>(root)] != -1) continue;
        scan.depth[static_cast<std::size_t>(root)] = 0;
        scan.theta[static_cast<std::size_t>(root)] = 1;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (const SignedGraph::IncidentEdge& ie : g.incident(v)) {
                if (ie.to == v) continue;  // loops are never tree edges
                if (scan.depth[static_cast<std::size_t>(ie.to)] != -1) continue;
                scan.depth[static_cast<std::size_t>(ie.to)] =
                    scan.depth[static_cast<std::size_t>(v)] + 1;
                scan.parent_vertex[static_cast<std::size_t>(ie.to)] = v;
                scan.parent_edge[static_cast<std::size_t>(ie.to)] = ie.edge_index;
                scan.in_tree[static_cast<std::size_t>(ie.edge_index)] = 1;
                scan.theta[static_cast<std::size_t>(ie.to)] =
                    static_cast<signed char>(scan.theta[static_cast<std::size_t>(v)] *
                                             sign_value(effective_sign(ie.sign, negate)));
                queue.push(ie.to);
            }
        }
    }
    return scan;
}

// Tree path between two vertices of the same component, as edge indices.
std::vector<int> tree_path(const ForestScan& scan, VertexId u, VertexId v) {
    std::vector<int> from_u;
    std::vector<int> from_v;
    while (scan.depth[static_cast<std::size_t>(u)] > scan.depth[static_cast<std::size_t>(v)]) {
        from_u.push_back(scan.parent_edge[static_cast<std::size_t>(u)]);
        u = scan.parent_vertex[static_cast<std::size_t>(u)];
    }
    while (scan.depth[static_cast<std::size_t>(v)] > scan.depth[static_cast<std::size_t>(u)]) {
        from_v.push_back(scan.parent_edge[static_cast<std::size_t>(v)]);
        v = scan.parent_vertex[static_cast<std::size_t>(v)];
    }
    while (u != v) {
        from_u.push_back(scan.parent_edge[static_cast<std::size_t>(u)]);
        u = scan.parent_vertex[static_cast<std::size_t>(u)];
        from_v.push_back(scan.parent_edge[static_cast<std::size_t>(v)]);
        v = scan.parent_vertex[static_cast<std::size_t>(v)];
    }
    std::reverse(from_v.begin(), from_v.end());
    from_u.insert(from_u.end(), from_v.begin(), from_v.end());
    return from_u;
}

SwitchSet negative_theta_set(const ForestScan& scan) {
    std::vector<VertexId> vertices;
    for (int v = 0; v < static_cast<int>(scan.theta.size()); ++v) {
        if (scan.theta[static_cast<std::size_t>(v)] < 0) vertices.push_back(v);
    }
    return SwitchSet(std::move(vertices));
}

// Balance test against the graph's signs, optionally sign-flipped. The
// flipped variant answers antibalance without constructing the negated
// graph, which would be ill-formed when negative loops are present.
BalanceReport balance_check(const SignedGraph& g, bool negate) {
    ForestScan scan = scan_forest(g, negate);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (scan.in_tree[static_cast<std::size_t>(e)]) continue;
        const SignedEdge& edge = g.edge(e);
        Sign s = effective_sign(edge.sign, negate);
        if (edge.is_loop()) {
            if (s == Sign::Minus) {
                BalanceReport report;
                report.balanced = false;
                report.witness_circuit = {e};
                return report;
            }
            continue;
        }
        int expected = scan.theta[static_cast<std::size_t>(edge.u)] *
                       scan.theta[static_cast<std::size_t>(edge.v)];
        if (sign_value(s) != expected) {
            BalanceReport report;
            report.balanced = false;
            report.witness_circuit = tree_path(scan, edge.u, edge.v);
            report.witness_circuit.push_back(e);
            return report;
        }
    }
    BalanceReport report;
    report.balanced = true;
    report.witness_switch = negative_theta_set(scan);
    return report;
}

}  // namespace

SignedGraph switched(const SignedGraph& g, const SwitchSet& s) {
    for (VertexId v : s.vertices()) {
        if (v < 0 || v >= g.vertex_count()) {
            throw VertexRangeError("switch set vertex " + std::to_string(v) + " out of range");
        }
    }
    std::vector<char> in_set(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : s.vertices()) in_set[static_cast<std::size_t>(v)] = 1;
    std::vector<SignedEdge> edges = g.edges();
    for (SignedEdge& e : edges) {
        if (!e.is_loop() &&
            in_set[static_cast<std::size_t>(e.u)] != in_set[static_cast<std::size_t>(e.v)]) {
            e.sign = opposite(e.sign);
        }
    }
    return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph negated(const SignedGraph& g) {
    std::vector<SignedEdge> edges = g.edges();
    for (SignedEdge& e : edges) e.sign = opposite(e.sign);
    return SignedGraph(g.vertex_count(), std::move(edges));
}

BalanceReport is_balanced(const SignedGraph& g) { return balance_check(g, false); }

bool is_antibalanced(const SignedGraph& g) { return balance_check(g, true).balanced; }

bool all_positive_switch(const SignedGraph& g, SwitchSet& out) {
    BalanceReport report = balance_check(g, false);
    if (!report.balanced) return false;
    out = report.witness_switch;
    return true;
}

bool all_negative_switch(const SignedGraph& g, SwitchSet& out) {
    BalanceReport report = balance_check(g, true);
    if (!report.balanced) return false;
    out = report.witness_switch;
    return true;
}

namespace {

// Edges reordered by (min endpoint, max endpoint, original position) so
// that two graphs over the same underlying edge multiset become
// position-comparable, then normalised to an all-positive spanning forest.
std::vector<Sign> canonical_signature(const SignedGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
    auto key = [&g](int e) {
        const SignedEdge& edge = g.edge(e);
        return std::make_tuple(std::min(edge.u, edge.v), std::max(edge.u, edge.v), e);
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    std::vector<SignedEdge> edges;
    edges.reserve(order.size());
    for (int e : order) {
        const SignedEdge& edge = g.edge(e);
        edges.push_back({std::min(edge.u, edge.v), std::max(edge.u, edge.v), edge.sign});
    }
    SignedGraph canonical(g.vertex_count(), std::move(edges));
    ForestScan scan = scan_forest(canonical, false);
    std::vector<Sign> signature;
    signature.reserve(static_cast<std::size_t>(canonical.edge_count()));
    for (int e = 0; e < canonical.edge_count(); ++e) {
        const SignedEdge& edge = canonical.edge(e);
        if (edge.is_loop()) {
            signature.push_back(edge.sign);
            continue;
        }
        int product = sign_value(edge.sign) * scan.theta[static_cast<std::size_t>(edge.u)] *
                      scan.theta[static_cast<std::size_t>(edge.v)];
        signature.push_back(product > 0 ? Sign::Plus : Sign::Minus);
    }
    return signature;
}

std::vector<std::pair<VertexId, VertexId>> underlying_multiset(const SignedGraph& g) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(static_cast<std::size_t>(g.edge_count()));
    for (const SignedEdge& e : g.edges()) {
        pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

bool switching_equivalent(const SignedGraph& g, const SignedGraph& h) {
    if (g.vertex_count() != h.vertex_count()) {
        throw UnderlyingMismatchError("vertex counts differ");
    }
    if (underlying_multiset(g) != underlying_multiset(h)) {
        throw UnderlyingMismatchError("underlying edge multisets differ");
    }
    return canonical_signature(g) == canonical_signature(h);
}

InducedSubgraph induced_subgraph(const SignedGraph& g, std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
        VertexId v = vertices[static_cast<std::size_t>(i)];
        if (v < 0 || v >= g.vertex_count()) {
            throw VertexRangeError("induced subgraph vertex out of range");
        }
        local[static_cast<std::size_t>(v)] = i;
    }
    std::vector<SignedEdge> edges;
    for (const SignedEdge& e : g.edges()) {
        int lu = local[static_cast<std::size_t>(e.u)];
        int lv = local[static_cast<std::size_t>(e.v)];
        if (lu != -1 && lv != -1) edges.push_back({lu, lv, e.sign});
    }
    return InducedSubgraph{SignedGraph(static_cast<int>(vertices.size()), std::move(edges)),
                           std::move(vertices)};
}

}  // namespace sgcol
