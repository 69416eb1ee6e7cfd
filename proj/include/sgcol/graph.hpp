#pragma once

#include <cstdint>
#include <vector>

#include "sgcol/errors.hpp"

namespace sgcol {

using VertexId = int;

enum class Sign : std::int8_t { Plus = 1, Minus = -1 };

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::Plus : Sign::Minus;
}

constexpr Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

struct SignedEdge {
    VertexId u;
    VertexId v;
    Sign sign;

    bool is_loop() const { return u == v; }
    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// A set of vertices at which signs are switched. Stored sorted and unique.
class SwitchSet {
public:
    SwitchSet() = default;
    explicit SwitchSet(std::vector<VertexId> vertices);

    bool contains(VertexId v) const;
    const std::vector<VertexId>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }
    std::size_t size() const { return vertices_.size(); }

    SwitchSet symmetric_difference(const SwitchSet& other) const;

    friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// Immutable signed multigraph. Parallel edges and negative loops are
/// allowed; positive loops are rejected at construction. A loop counts
/// two toward the degree of its vertex.
class SignedGraph {
public:
    struct IncidentEdge {
        VertexId to;
        Sign sign;
        int edge_index;
    };

    SignedGraph(int vertex_count, std::vector<SignedEdge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }
    const SignedEdge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    /// Incident edges of v in insertion order; a loop appears once.
    const std::vector<IncidentEdge>& incident(VertexId v) const {
        return incident_[static_cast<std::size_t>(v)];
    }

    int degree(VertexId v) const { return degree_[static_cast<std::size_t>(v)]; }
    int max_degree() const;

    bool has_loop() const;
    bool has_loop_at(VertexId v) const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loop() && !has_parallel_edges(); }

    /// Underlying adjacency between two distinct vertices.
    bool adjacent(VertexId u, VertexId v) const;
    /// Distinct neighbours of v, sorted ascending, excluding v itself.
    std::vector<VertexId> neighbour_set(VertexId v) const;

    bool is_connected() const;
    std::vector<int> component_ids() const;

    /// True when every pair of distinct vertices is adjacent.
    bool underlying_complete() const;

    /// Loopless all-positive simple graph on the same vertices, one edge
    /// per adjacent pair, pairs sorted ascending.
    SignedGraph underlying_simple() const;

    friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_;
    std::vector<SignedEdge> edges_;
    std::vector<std::vector<IncidentEdge>> incident_;
    std::vector<int> degree_;
};

/// Result of a balance test, carrying a replayable witness either way.
struct BalanceReport {
    bool balanced = false;
    /// When balanced: switching here makes every edge positive.
    SwitchSet witness_switch;
    /// When unbalanced: edge indices of a circuit whose sign product is -1.
    std::vector<int> witness_circuit;
};

/// Reverses the sign of every non-loop edge with exactly one endpoint in s.
SignedGraph switched(const SignedGraph& g, const SwitchSet& s);

/// Flips every edge sign. Throws PositiveLoopError if g has a loop.
SignedGraph negated(const SignedGraph& g);

BalanceReport is_balanced(const SignedGraph& g);

bool is_antibalanced(const SignedGraph& g);

/// Switch set making every edge positive (graph balanced), or nothing.
bool all_positive_switch(const SignedGraph& g, SwitchSet& out);

/// Switch set making every edge negative (graph antibalanced), or nothing.
bool all_negative_switch(const SignedGraph& g, SwitchSet& out);

/// True when some switching carries g onto h. Both must share the same
/// labelled underlying edge multiset; otherwise UnderlyingMismatchError.
bool switching_equivalent(const SignedGraph& g, const SignedGraph& h);

struct InducedSubgraph {
    SignedGraph graph;
    /// original[i] is the vertex of the parent graph behind new vertex i.
    std::vector<VertexId> original;
};

/// Subgraph induced by the given vertices (deduplicated, sorted ascending).
InducedSubgraph induced_subgraph(const SignedGraph& g, std::vector<VertexId> vertices);

}  // namespace sgcol
