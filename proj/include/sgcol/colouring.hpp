#pragma once

#include <optional>
#include <vector>

#include "sgcol/graph.hpp"

namespace sgcol {

/// Total map from vertices to integer colours, indexed by vertex.
using Colouring = std::vector<int>;

/// The n-element sign-symmetric palette: {+-1..+-k} for n=2k,
/// {0,+-1..+-k} for n=2k+1. Returned in ascending order.
std::vector<int> colour_set(int n);

/// Membership in colour_set(n) without materialising it.
bool in_colour_set(int colour, int n);

/// True when every colour of phi lies in colour_set(n).
bool colouring_within(const Colouring& phi, int n);

/// Colour preference ladder 0, 1, -1, 2, -2, ...
int ladder_value(int rank);

/// Index of the first violated edge in storage order, or nothing when the
/// colouring is proper: phi(u) != sign(e) * phi(v) for every edge e=uv,
/// loops included.
std::optional<int> check_proper(const SignedGraph& g, const Colouring& phi);

/// Negates the colour at every vertex of s.
Colouring switch_colouring(Colouring phi, const SwitchSet& s);

/// Colours vertices in the given order. A neighbour w already coloured
/// and joined by an edge of sign s forbids s*phi(w); a loop forbids 0.
/// Each vertex takes the smallest-absolute-value available colour
/// (positive before negative) from colour_set(palette). With palette = 0
/// the palette defaults to B+1, where B is the order's largest forbidding
/// capacity: earlier incident edges plus one for a loop. B+1 colours
/// always suffice, and along a degeneracy ordering B equals the
/// degeneracy. An explicit palette below B+1 can run dry, which throws
/// InternalBoundError. The order must be a permutation.
Colouring greedy_colour(const SignedGraph& g, const std::vector<VertexId>& order,
                        int palette = 0);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<VertexId> order;
};

/// Elimination ordering by repeated minimum-degree deletion (lowest index
/// on ties), reversed. Signs are ignored; parallel edges each count and a
/// loop counts two, so greedy colouring along the order stays within
/// colour_set(degeneracy + 1).
DegeneracyResult degeneracy_ordering(const SignedGraph& g);

enum class ZeroConstraint { RequireZero, ForbidZero };

/// Proper colouring with all values in colour_set(n), or nothing.
/// Backtracking over vertices in degeneracy order; global negation
/// symmetry is broken by forcing the first-coloured vertex nonnegative.
std::optional<Colouring> find_n_colouring(const SignedGraph& g, int n);

/// Same search with a zero/nonzero constraint pinned at one vertex.
/// The constraint is negation-symmetric, so symmetry breaking stays valid.
std::optional<Colouring> find_n_colouring(const SignedGraph& g, int n, VertexId vertex,
                                          ZeroConstraint constraint);

struct ChromaticResult {
    int chi = 0;
    Colouring witness;
};

/// Smallest n admitting an n-colouring, with a witness. The empty graph
/// gets chi = 0 by convention.
ChromaticResult chromatic_number(const SignedGraph& g);

struct GammaPair {
    int gamma = 0;
    int gamma_star = 0;
};

/// gamma: least k >= 0 with a proper colouring into {-k..k}.
/// gamma_star: least k >= 0 with a zero-free proper colouring into
/// {+-1..+-k}. Each is computed by its own feasibility search.
GammaPair gamma_pair(const SignedGraph& g);

}  // namespace sgcol
