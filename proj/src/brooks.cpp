#include "sgcol/brooks.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <queue>

namespace sgcol {

const char* exceptional_name(ExceptionalClass c) {
    switch (c) {
        case ExceptionalClass::BalancedComplete: return "balanced-complete";
        case ExceptionalClass::BalancedOddCircuit: return "balanced-odd-circuit";
        case ExceptionalClass::UnbalancedEvenCircuit: return "unbalanced-even-circuit";
        case ExceptionalClass::None: break;
    }
    return "none";
}

namespace {

void require_simple(const SignedGraph& g) {
    if (!g.is_simple()) throw NotSimpleError("graph must be simple");
}

void require_connected(const SignedGraph& g) {
    if (!g.is_connected()) throw NotConnectedError("graph must be connected");
}

Sign edge_sign(const SignedGraph& g, VertexId u, VertexId v) {
    for (const SignedGraph::IncidentEdge& ie : g.incident(u)) {
        if (ie.to == v) return ie.sign;
    }
    throw InvalidArgumentError("no edge between requested vertices");
}

bool underlying_circuit(const SignedGraph& g) {
    if (g.vertex_count() < 3) return false;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

// Cyclic vertex order of a connected graph whose every degree is 2,
// starting at vertex 0 toward its smaller neighbour.
std::vector<VertexId> circuit_order(const SignedGraph& g) {
    std::vector<VertexId> order{0};
    VertexId prev = -1;
    VertexId cur = 0;
    while (static_cast<int>(order.size()) < g.vertex_count()) {
        std::vector<VertexId> nb = g.neighbour_set(cur);
        VertexId next = nb[0] == prev ? nb[1] : nb[0];
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

void add_trace(BrooksTrace* trace, std::string step, std::vector<VertexId> vertices,
               SwitchSet switches, Colouring partial) {
    if (trace) {
        trace->push_back(BrooksTraceEvent{std::move(step), std::move(vertices),
                                          std::move(switches), std::move(partial)});
    }
}

// Greedy extension of a partial colouring along `order`, restricted to
// colour_set(palette). Returns false when some vertex has no admissible
// colour, which the callers' degree arguments rule out.
bool greedy_extend(const SignedGraph& g, const std::vector<VertexId>& order, int palette,
                   Colouring& phi, std::vector<char>& assigned) {
    std::vector<int> ladder;
    ladder.reserve(static_cast<std::size_t>(palette));
    for (int rank = 0; static_cast<int>(ladder.size()) < palette; ++rank) {
        int candidate = ladder_value(rank);
        if (in_colour_set(candidate, palette)) ladder.push_back(candidate);
    }
    std::vector<int> forbidden;
    for (VertexId v : order) {
        if (assigned[static_cast<std::size_t>(v)]) continue;
        forbidden.clear();
        for (const SignedGraph::IncidentEdge& ie : g.incident(v)) {
            if (ie.to == v) {
                forbidden.push_back(0);
            } else if (assigned[static_cast<std::size_t>(ie.to)]) {
                forbidden.push_back(sign_value(ie.sign) * phi[static_cast<std::size_t>(ie.to)]);
            }
        }
        bool placed = false;
        for (int candidate : ladder) {
            if (std::find(forbidden.begin(), forbidden.end(), candidate) == forbidden.end()) {
                phi[static_cast<std::size_t>(v)] = candidate;
                assigned[static_cast<std::size_t>(v)] = 1;
                placed = true;
                break;
            }
        }
        if (!placed) return false;
    }
    return true;
}

struct PaletteColouring {
    Colouring phi;
    int palette = 0;
};

PaletteColouring colour_connected(const SignedGraph& g, BrooksTrace* trace);

// Sign-symmetric palette permutation sending `from` (nonzero) to 1 by
// exchanging the absolute-value classes |from| and 1.
Colouring permute_pair_to_one(Colouring phi, int from) {
    int a = std::abs(from);
    bool positive = from > 0;
    for (int& c : phi) {
        int ac = std::abs(c);
        if (ac == a) {
            c = positive ? c / a : -(c / a);
        } else if (ac == 1) {
            c = positive ? c * a : -c * a;
        }
    }
    return phi;
}

// Rewrites colour 0 to palette/2 so the colouring fits an even palette.
// Sound whenever the source palette is smaller than `palette`.
Colouring embed_zero_free(Colouring phi, int palette) {
    int replacement = palette / 2;
    for (int c : phi) {
        if (std::abs(c) == replacement) {
            throw InternalBoundError("zero replacement colour already in use");
        }
    }
    for (int& c : phi) {
        if (c == 0) c = replacement;
    }
    return phi;
}

// Recolours a piece so the distinguished vertex avoids 0: colour 0 goes
// to a neighbour u of `v` first, then greedy along an ordering ending at
// v. The 0 at u forbids 0 at v whatever the sign of uv.
std::optional<Colouring> zero_start_colouring(const SignedGraph& g, VertexId v, int palette) {
    for (VertexId u : g.neighbour_set(v)) {
        std::vector<VertexId> rest;
        for (VertexId w = 0; w < g.vertex_count(); ++w) {
            if (w != u) rest.push_back(w);
        }
        InducedSubgraph sub = induced_subgraph(g, rest);
        if (!sub.graph.is_connected()) continue;
        int local_v =
            static_cast<int>(std::lower_bound(sub.original.begin(), sub.original.end(), v) -
                             sub.original.begin());
        std::vector<VertexId> order{u};
        for (VertexId w : connected_ordering(sub.graph, local_v)) {
            order.push_back(sub.original[static_cast<std::size_t>(w)]);
        }
        Colouring phi(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> assigned(static_cast<std::size_t>(g.vertex_count()), 0);
        phi[static_cast<std::size_t>(u)] = 0;
        assigned[static_cast<std::size_t>(u)] = 1;
        if (!greedy_extend(g, order, palette, phi, assigned)) continue;
        if (phi[static_cast<std::size_t>(v)] == 0) continue;
        return phi;
    }
    return std::nullopt;
}

PaletteColouring colour_case1(const SignedGraph& g, BrooksTrace* trace) {
    int delta = g.max_degree();
    NoncutPair pair = find_noncut_pair(g);
    std::vector<VertexId> flips;
    if (edge_sign(g, pair.a, pair.x) == Sign::Minus) flips.push_back(pair.a);
    if (edge_sign(g, pair.b, pair.x) == Sign::Minus) flips.push_back(pair.b);
    SwitchSet flip(std::move(flips));
    SignedGraph g2 = switched(g, flip);
    add_trace(trace, "case1-pair", {pair.a, pair.x, pair.b}, flip, {});

    std::vector<VertexId> rest;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (w != pair.a && w != pair.b) rest.push_back(w);
    }
    InducedSubgraph sub = induced_subgraph(g2, rest);
    int local_x = static_cast<int>(std::lower_bound(sub.original.begin(), sub.original.end(),
                                                    pair.x) -
                                   sub.original.begin());
    std::vector<VertexId> order;
    for (VertexId w : connected_ordering(sub.graph, local_x)) {
        order.push_back(sub.original[static_cast<std::size_t>(w)]);
    }
    Colouring phi(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> assigned(static_cast<std::size_t>(g.vertex_count()), 0);
    phi[static_cast<std::size_t>(pair.a)] = 1;
    phi[static_cast<std::size_t>(pair.b)] = 1;
    assigned[static_cast<std::size_t>(pair.a)] = 1;
    assigned[static_cast<std::size_t>(pair.b)] = 1;
    if (!greedy_extend(g2, order, delta, phi, assigned)) {
        throw InternalBoundError("greedy ran out of colours on a 2-connected graph");
    }
    Colouring result = switch_colouring(std::move(phi), flip);
    add_trace(trace, "case1-done", {pair.a, pair.x, pair.b}, flip, result);
    return PaletteColouring{std::move(result), delta};
}

PaletteColouring colour_case2(const SignedGraph& g, VertexId cut, BrooksTrace* trace) {
    int delta = g.max_degree();
    add_trace(trace, "case2-cut", {cut}, SwitchSet{}, {});

    std::vector<VertexId> others;
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
        if (w != cut) others.push_back(w);
    }
    InducedSubgraph remainder = induced_subgraph(g, others);
    std::vector<int> comp = remainder.graph.component_ids();
    int comp_count = *std::max_element(comp.begin(), comp.end()) + 1;

    struct Piece {
        SignedGraph graph;
        std::vector<VertexId> original;
        int local_cut;
        Colouring phi;
    };
    std::vector<Piece> pieces;
    pieces.reserve(static_cast<std::size_t>(comp_count));
    for (int c = 0; c < comp_count; ++c) {
        std::vector<VertexId> vertices{cut};
        for (int i = 0; i < static_cast<int>(others.size()); ++i) {
            if (comp[static_cast<std::size_t>(i)] == c) {
                vertices.push_back(remainder.original[static_cast<std::size_t>(i)]);
            }
        }
        InducedSubgraph sub = induced_subgraph(g, std::move(vertices));
        int local_cut =
            static_cast<int>(std::lower_bound(sub.original.begin(), sub.original.end(), cut) -
                             sub.original.begin());
        PaletteColouring pc = colour_connected(sub.graph, nullptr);
        if (pc.palette > delta) {
            throw InternalBoundError("cut-vertex piece needed more colours than the whole graph");
        }
        Colouring phi = std::move(pc.phi);
        if (delta % 2 == 0 &&
            std::find(phi.begin(), phi.end(), 0) != phi.end()) {
            phi = embed_zero_free(std::move(phi), delta);
        }
        pieces.push_back(Piece{std::move(sub.graph), std::move(sub.original), local_cut,
                               std::move(phi)});
    }

    int common = 1;
    if (delta % 2 == 1) {
        std::vector<char> zero_only(pieces.size(), 0);
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            Piece& piece = pieces[i];
            if (piece.phi[static_cast<std::size_t>(piece.local_cut)] != 0) continue;
            if (std::optional<Colouring> phi =
                    zero_start_colouring(piece.graph, piece.local_cut, delta)) {
                piece.phi = std::move(*phi);
            } else if (std::optional<Colouring> phi = find_n_colouring(
                           piece.graph, delta, piece.local_cut, ZeroConstraint::ForbidZero)) {
                piece.phi = std::move(*phi);
            } else {
                zero_only[i] = 1;
            }
        }
        if (std::find(zero_only.begin(), zero_only.end(), 1) != zero_only.end()) {
            common = 0;
            for (std::size_t i = 0; i < pieces.size(); ++i) {
                Piece& piece = pieces[i];
                if (piece.phi[static_cast<std::size_t>(piece.local_cut)] == 0) continue;
                std::optional<Colouring> phi = find_n_colouring(
                    piece.graph, delta, piece.local_cut, ZeroConstraint::RequireZero);
                if (!phi) {
                    throw InternalBoundError("cut-vertex pieces disagree on colour 0");
                }
                piece.phi = std::move(*phi);
            }
        }
    }
    if (common == 1) {
        for (Piece& piece : pieces) {
            int at_cut = piece.phi[static_cast<std::size_t>(piece.local_cut)];
            if (at_cut == 0) {
                throw InternalBoundError("unexpected colour 0 at cut vertex");
            }
            piece.phi = permute_pair_to_one(std::move(piece.phi), at_cut);
        }
    }

    Colouring phi(static_cast<std::size_t>(g.vertex_count()), 0);
    phi[static_cast<std::size_t>(cut)] = common;
    for (const Piece& piece : pieces) {
        for (int i = 0; i < static_cast<int>(piece.original.size()); ++i) {
            phi[static_cast<std::size_t>(piece.original[static_cast<std::size_t>(i)])] =
                piece.phi[static_cast<std::size_t>(i)];
        }
    }
    return PaletteColouring{std::move(phi), delta};
}

PaletteColouring colour_connected(const SignedGraph& g, BrooksTrace* trace) {
    int n = g.vertex_count();
    int delta = g.max_degree();

    if (g.underlying_complete()) {
        Colouring phi = colour_complete(g);
        int palette = is_balanced(g).balanced ? n : std::max(n - 1, 1);
        return PaletteColouring{std::move(phi), palette};
    }

    if (underlying_circuit(g)) {
        bool balanced = is_balanced(g).balanced;
        bool odd = n % 2 == 1;
        if (balanced && odd) {
            SwitchSet s;
            all_positive_switch(g, s);
            std::vector<VertexId> order = circuit_order(g);
            Colouring psi(static_cast<std::size_t>(n), 0);
            for (int i = 0; i + 1 < n; ++i) {
                psi[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
                    i % 2 == 0 ? 1 : -1;
            }
            return PaletteColouring{switch_colouring(std::move(psi), s), 3};
        }
        if (!balanced && !odd) {
            std::vector<VertexId> order = circuit_order(g);
            // Switch so the circuit's closing edge carries the one minus.
            std::vector<VertexId> flips;
            int theta = 1;
            for (int i = 1; i < n; ++i) {
                theta *= sign_value(edge_sign(g, order[static_cast<std::size_t>(i - 1)],
                                              order[static_cast<std::size_t>(i)]));
                if (theta < 0) flips.push_back(order[static_cast<std::size_t>(i)]);
            }
            SwitchSet s(std::move(flips));
            Colouring psi(static_cast<std::size_t>(n), 0);
            for (int i = 1; i < n; ++i) {
                psi[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
                    i % 2 == 1 ? 1 : -1;
            }
            return PaletteColouring{switch_colouring(std::move(psi), s), 3};
        }
        // Other circuits are antibalanced; fall through to the 2-colouring.
    }

    if (delta <= 2) {
        SwitchSet s;
        if (!all_negative_switch(g, s)) {
            throw InternalBoundError("low-degree graph expected to be antibalanced");
        }
        Colouring psi(static_cast<std::size_t>(n), 1);
        return PaletteColouring{switch_colouring(std::move(psi), s), 2};
    }

    std::vector<VertexId> cuts = cut_vertices(g);
    if (cuts.empty()) return colour_case1(g, trace);
    return colour_case2(g, cuts.front(), trace);
}

}  // namespace

ExceptionalClass classify_exceptional(const SignedGraph& g) {
    require_simple(g);
    require_connected(g);
    if (g.underlying_complete()) {
        return is_balanced(g).balanced ? ExceptionalClass::BalancedComplete
                                       : ExceptionalClass::None;
    }
    if (underlying_circuit(g)) {
        bool balanced = is_balanced(g).balanced;
        bool odd = g.vertex_count() % 2 == 1;
        if (balanced && odd) return ExceptionalClass::BalancedOddCircuit;
        if (!balanced && !odd) return ExceptionalClass::UnbalancedEvenCircuit;
    }
    return ExceptionalClass::None;
}

namespace {

// First vertex triple (ascending) spanning a triangle with sign product -1.
std::optional<std::array<VertexId, 3>> find_unbalanced_triangle(const SignedGraph& g) {
    int n = g.vertex_count();
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) {
            for (VertexId k = j + 1; k < n; ++k) {
                int product = sign_value(edge_sign(g, i, j)) * sign_value(edge_sign(g, i, k)) *
                              sign_value(edge_sign(g, j, k));
                if (product < 0) return std::array<VertexId, 3>{i, j, k};
            }
        }
    }
    return std::nullopt;
}

Colouring colour_complete_rec(const SignedGraph& g) {
    int n = g.vertex_count();
    SwitchSet s;
    if (all_positive_switch(g, s)) {
        std::vector<int> palette = colour_set(n);
        Colouring psi(static_cast<std::size_t>(n), 0);
        for (VertexId v = 0; v < n; ++v) psi[static_cast<std::size_t>(v)] = palette[static_cast<std::size_t>(v)];
        return switch_colouring(std::move(psi), s);
    }
    if (n % 2 == 1) {
        if (n == 3) {
            if (!all_negative_switch(g, s)) {
                throw InternalBoundError("unbalanced triangle is not antibalanced");
            }
            Colouring psi(3, 1);
            return switch_colouring(std::move(psi), s);
        }
        std::optional<std::array<VertexId, 3>> triangle = find_unbalanced_triangle(g);
        if (!triangle) throw InternalBoundError("unbalanced complete graph without unbalanced triangle");
        std::vector<VertexId> spare;
        for (VertexId v = 0; v < n && static_cast<int>(spare.size()) < 2; ++v) {
            if (v != (*triangle)[0] && v != (*triangle)[1] && v != (*triangle)[2]) {
                spare.push_back(v);
            }
        }
        VertexId x = spare[0];
        VertexId y = spare[1];
        if (edge_sign(g, x, y) == Sign::Plus) {
            SwitchSet flip(std::vector<VertexId>{x});
            return switch_colouring(colour_complete_rec(switched(g, flip)), flip);
        }
        int d = (n - 1) / 2;
        std::vector<VertexId> rest;
        for (VertexId v = 0; v < n; ++v) {
            if (v != x && v != y) rest.push_back(v);
        }
        InducedSubgraph sub = induced_subgraph(g, rest);
        Colouring inner = colour_complete_rec(sub.graph);
        Colouring phi(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < static_cast<int>(sub.original.size()); ++i) {
            phi[static_cast<std::size_t>(sub.original[static_cast<std::size_t>(i)])] =
                inner[static_cast<std::size_t>(i)];
        }
        phi[static_cast<std::size_t>(x)] = d;
        phi[static_cast<std::size_t>(y)] = d;
        return phi;
    }
    // n even: drop a vertex keeping the remainder unbalanced.
    for (VertexId v = 0; v < n; ++v) {
        std::vector<VertexId> rest;
        for (VertexId w = 0; w < n; ++w) {
            if (w != v) rest.push_back(w);
        }
        InducedSubgraph sub = induced_subgraph(g, rest);
        if (is_balanced(sub.graph).balanced) continue;
        Colouring inner = colour_complete_rec(sub.graph);
        Colouring phi(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < static_cast<int>(sub.original.size()); ++i) {
            phi[static_cast<std::size_t>(sub.original[static_cast<std::size_t>(i)])] =
                inner[static_cast<std::size_t>(i)];
        }
        phi[static_cast<std::size_t>(v)] = 0;
        return phi;
    }
    throw InternalBoundError("every one-vertex deletion of an unbalanced complete graph balanced");
}

}  // namespace

Colouring colour_complete(const SignedGraph& g) {
    require_simple(g);
    if (!g.underlying_complete()) throw NotCompleteError("underlying graph is not complete");
    if (g.vertex_count() == 0) return {};
    Colouring phi = colour_complete_rec(g);
    if (check_proper(g, phi)) {
        throw InternalBoundError("complete-graph colouring failed verification");
    }
    return phi;
}

std::vector<VertexId> connected_ordering(const SignedGraph& g, VertexId last) {
    if (last < 0 || last >= g.vertex_count()) {
        throw VertexRangeError("ordering anchor out of range");
    }
    require_connected(g);
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> discovery{last};
    seen[static_cast<std::size_t>(last)] = 1;
    std::queue<VertexId> queue;
    queue.push(last);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        std::vector<VertexId> nb = g.neighbour_set(v);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
            if (!seen[static_cast<std::size_t>(*it)]) {
                seen[static_cast<std::size_t>(*it)] = 1;
                discovery.push_back(*it);
                queue.push(*it);
            }
        }
    }
    std::reverse(discovery.begin(), discovery.end());
    return discovery;
}

std::vector<VertexId> cut_vertices(const SignedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
    int timer = 0;

    auto dfs = [&](auto&& self, VertexId u) -> void {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        for (VertexId w : g.neighbour_set(u)) {
            if (disc[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = u;
                ++children;
                self(self, w);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (parent[static_cast<std::size_t>(u)] != -1 &&
                    low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
                    is_cut[static_cast<std::size_t>(u)] = 1;
                }
            } else if (w != parent[static_cast<std::size_t>(u)]) {
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        }
        if (parent[static_cast<std::size_t>(u)] == -1 && children >= 2) {
            is_cut[static_cast<std::size_t>(u)] = 1;
        }
    };
    for (VertexId v = 0; v < n; ++v) {
        if (disc[static_cast<std::size_t>(v)] == -1) dfs(dfs, v);
    }
    std::vector<VertexId> result;
    for (VertexId v = 0; v < n; ++v) {
        if (is_cut[static_cast<std::size_t>(v)]) result.push_back(v);
    }
    return result;
}

bool is_two_connected(const SignedGraph& g) {
    return g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).empty();
}

NoncutPair find_noncut_pair(const SignedGraph& g) {
    require_simple(g);
    if (!is_two_connected(g) || g.max_degree() < 3 || g.underlying_complete()) {
        throw PreconditionError(
            "requires a 2-connected non-complete simple graph with max degree >= 3");
    }
    int n = g.vertex_count();
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId x : g.neighbour_set(a)) {
            for (VertexId b : g.neighbour_set(x)) {
                if (b == a || g.adjacent(a, b)) continue;
                std::vector<VertexId> rest;
                for (VertexId w = 0; w < n; ++w) {
                    if (w != a && w != b) rest.push_back(w);
                }
                if (induced_subgraph(g, rest).graph.is_connected()) {
                    return NoncutPair{a, x, b};
                }
            }
        }
    }
    throw InternalBoundError("no distance-2 pair with connected remainder found");
}

BrooksCertificate brooks_colour(const SignedGraph& g, BrooksTrace* trace) {
    require_simple(g);
    require_connected(g);
    ExceptionalClass cls = classify_exceptional(g);
    int delta = g.max_degree();
    int bound = cls == ExceptionalClass::None ? delta : delta + 1;

    PaletteColouring pc = colour_connected(g, trace);
    if (check_proper(g, pc.phi)) {
        throw InternalBoundError("constructed colouring is not proper");
    }
    if (!colouring_within(pc.phi, bound)) {
        throw InternalBoundError("constructed colouring leaves its palette");
    }
    return BrooksCertificate{std::move(pc.phi), bound, cls};
}

}  // namespace sgcol
