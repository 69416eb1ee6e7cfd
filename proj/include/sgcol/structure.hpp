#pragma once

#include <optional>
#include <vector>

#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"

namespace sgcol {

/// Default vertex cap for the exhaustive partition searches below.
inline constexpr int kBruteForceCap = 14;

struct VertexForestPartition {
    /// Disjoint vertex sets covering all vertices, each inducing a forest.
    std::vector<std::vector<VertexId>> parts;
};

struct EdgeForestPair {
    /// Disjoint edge-index sets covering all edges, each acyclic.
    std::vector<int> forest1;
    std::vector<int> forest2;
};

struct AcyclicColouring {
    /// Colours 1..n; proper on the underlying graph, with every two
    /// colour classes inducing a forest.
    std::vector<int> values;
};

struct IndependentForestPartition {
    std::vector<VertexId> independent;
    std::vector<VertexId> forest;
};

/// The family witnessing sharpness of the 2*chi-1 bound: one all-positive
/// complete block, n-1 all-negative complete blocks, and positive edges
/// between all non-corresponding vertices of different blocks. Vertex
/// (i, j), 1-based, sits at index (i-1)*n + (j-1).
SignedGraph construct_sharpness_graph(int n);

/// Switches each part's induced forest all-negative, gives part i colour
/// i, and pulls the colouring back through the switching. At most 2k
/// colours for k parts.
Colouring colour_from_vertex_forest_partition(const SignedGraph& g,
                                              const VertexForestPartition& partition);

/// Switches forest1 all-negative and 2-colours forest2 with {1, 2}.
Colouring colour_from_two_edge_forests(const SignedGraph& g, const EdgeForestPair& forests);

/// Pairs acyclic colour classes {2i-1, 2i} into forest-inducing parts; an
/// odd leftover class is recoloured 0. Output stays within colour_set(n)
/// for an n-colour acyclic input.
Colouring colour_from_acyclic(const SignedGraph& g, const AcyclicColouring& acyclic);

/// Assigns 0 on the independent set and 1 on the switched-all-negative
/// forest; output within colour_set(3).
Colouring colour_from_independent_forest_partition(const SignedGraph& g,
                                                   const IndependentForestPartition& partition);

/// Exhaustive search for a proper colouring of the underlying graph with
/// colours 1..n whose every two classes induce a forest.
std::optional<AcyclicColouring> brute_acyclic_colouring(const SignedGraph& g, int n,
                                                        int cap = kBruteForceCap);

std::optional<EdgeForestPair> find_two_edge_forests(const SignedGraph& g,
                                                    int cap = kBruteForceCap);

std::optional<VertexForestPartition> find_vertex_forest_partition(const SignedGraph& g, int parts,
                                                                  int cap = kBruteForceCap);

std::optional<IndependentForestPartition> find_independent_forest_partition(
    const SignedGraph& g, int cap = kBruteForceCap);

/// Validation helpers, also used by the partition file front end.
void validate_vertex_forest_partition(const SignedGraph& g, const VertexForestPartition& p);
void validate_edge_forest_pair(const SignedGraph& g, const EdgeForestPair& p);
void validate_acyclic_colouring(const SignedGraph& g, const AcyclicColouring& a);
void validate_independent_forest_partition(const SignedGraph& g,
                                           const IndependentForestPartition& p);

}  // namespace sgcol
