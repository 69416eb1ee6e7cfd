#pragma once

#include <string>
#include <vector>

#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"

namespace sgcol {

/// The three connected simple families whose chromatic number reaches
/// max degree + 1.
enum class ExceptionalClass { None, BalancedComplete, BalancedOddCircuit, UnbalancedEvenCircuit };

const char* exceptional_name(ExceptionalClass c);

struct BrooksCertificate {
    Colouring colouring;
    /// Colours lie in colour_set(bound_used); equals max degree except on
    /// exceptional graphs, where it is max degree + 1.
    int bound_used = 0;
    ExceptionalClass exceptional = ExceptionalClass::None;
};

/// Optional trace of the constructive colouring, for inspection of
/// intermediate switchings and partial colourings.
struct BrooksTraceEvent {
    std::string step;
    std::vector<VertexId> vertices;
    SwitchSet switches;
    Colouring partial;
};
using BrooksTrace = std::vector<BrooksTraceEvent>;

/// Requires a simple connected graph; NotSimpleError / NotConnectedError.
ExceptionalClass classify_exceptional(const SignedGraph& g);

/// Colours a simple signed graph whose underlying graph is complete on n
/// vertices: n distinct colours when balanced, at most n-1 colours
/// otherwise. Throws NotCompleteError / NotSimpleError.
Colouring colour_complete(const SignedGraph& g);

/// Ordering of a connected graph ending at `last` in which every earlier
/// vertex has a neighbour later in the sequence (reversed breadth-first
/// discovery from `last`, neighbours scanned in descending index order).
std::vector<VertexId> connected_ordering(const SignedGraph& g, VertexId last);

struct NoncutPair {
    VertexId a;
    VertexId x;
    VertexId b;
};

/// First (a, x, b) in lexicographic scan order with a, b non-adjacent,
/// x a common neighbour, and the graph minus {a, b} connected. Requires
/// a simple 2-connected non-complete graph with max degree >= 3;
/// PreconditionError otherwise.
NoncutPair find_noncut_pair(const SignedGraph& g);

/// Cut vertices of a connected graph (empty when 2-connected).
std::vector<VertexId> cut_vertices(const SignedGraph& g);

bool is_two_connected(const SignedGraph& g);

/// Constructive colouring of a simple connected signed graph within
/// colour_set(max degree), or max degree + 1 on the exceptional families.
/// The output is verified before returning.
BrooksCertificate brooks_colour(const SignedGraph& g, BrooksTrace* trace = nullptr);

}  // namespace sgcol
