#include "sgcol/colouring.hpp"

#include <algorithm>
#include <cstdlib>

namespace sgcol {

std::vector<int> colour_set(int n) {
    if (n < 1) throw InvalidArgumentError("colour set size must be positive");
    int k = n / 2;
    std::vector<int> colours;
    colours.reserve(static_cast<std::size_t>(n));
    for (int c = -k; c <= k; ++c) {
        if (c == 0 && n % 2 == 0) continue;
        colours.push_back(c);
    }
    return colours;
}

bool in_colour_set(int colour, int n) {
    if (n < 1) return false;
    int k = n / 2;
    if (colour == 0) return n % 2 == 1;
    return std::abs(colour) <= k;
}

bool colouring_within(const Colouring& phi, int n) {
    return std::all_of(phi.begin(), phi.end(), [n](int c) { return in_colour_set(c, n); });
}

int ladder_value(int rank) {
    if (rank == 0) return 0;
    return rank % 2 == 1 ? (rank + 1) / 2 : -(rank / 2);
}

std::optional<int> check_proper(const SignedGraph& g, const Colouring& phi) {
    if (static_cast<int>(phi.size()) != g.vertex_count()) {
        throw InvalidArgumentError("colouring size does not match vertex count");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const SignedEdge& edge = g.edge(e);
        if (phi[static_cast<std::size_t>(edge.u)] ==
            sign_value(edge.sign) * phi[static_cast<std::size_t>(edge.v)]) {
            return e;
        }
    }
    return std::nullopt;
}

Colouring switch_colouring(Colouring phi, const SwitchSet& s) {
    for (VertexId v : s.vertices()) {
        if (v < 0 || v >= static_cast<int>(phi.size())) {
            throw VertexRangeError("switch set vertex out of range for colouring");
        }
        phi[static_cast<std::size_t>(v)] = -phi[static_cast<std::size_t>(v)];
    }
    return phi;
}

namespace {

void validate_order(const SignedGraph& g, const std::vector<VertexId>& order) {
    if (static_cast<int>(order.size()) != g.vertex_count()) {
        throw InvalidArgumentError("order is not a permutation of the vertices");
    }
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : order) {
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) {
            throw InvalidArgumentError("order is not a permutation of the vertices");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

bool is_forbidden(int candidate, const std::vector<int>& forbidden) {
    return std::find(forbidden.begin(), forbidden.end(), candidate) != forbidden.end();
}

}  // namespace

Colouring greedy_colour(const SignedGraph& g, const std::vector<VertexId>& order, int palette) {
    validate_order(g, order);
    int n = g.vertex_count();
    std::vector<int> position(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

    if (palette <= 0) {
        // Forbidding capacity per vertex: one per earlier incident edge
        // plus one when a loop pins 0. M_{B+1} can never run dry.
        int capacity = 0;
        for (VertexId v = 0; v < n; ++v) {
            int forbids = g.has_loop_at(v) ? 1 : 0;
            for (const SignedGraph::IncidentEdge& ie : g.incident(v)) {
                if (ie.to != v && position[static_cast<std::size_t>(ie.to)] <
                                      position[static_cast<std::size_t>(v)]) {
                    ++forbids;
                }
            }
            capacity = std::max(capacity, forbids);
        }
        palette = capacity + 1;
    }
    std::vector<int> ladder;
    ladder.reserve(static_cast<std::size_t>(palette));
    for (int rank = 0; static_cast<int>(ladder.size()) < palette; ++rank) {
        int candidate = ladder_value(rank);
        if (in_colour_set(candidate, palette)) ladder.push_back(candidate);
    }

    Colouring phi(static_cast<std::size_t>(n), 0);
    std::vector<char> coloured(static_cast<std::size_t>(n), 0);
    std::vector<int> forbidden;
    for (VertexId v : order) {
        forbidden.clear();
        for (const SignedGraph::IncidentEdge& ie : g.incident(v)) {
            if (ie.to == v) {
                forbidden.push_back(0);
            } else if (coloured[static_cast<std::size_t>(ie.to)]) {
                forbidden.push_back(sign_value(ie.sign) * phi[static_cast<std::size_t>(ie.to)]);
            }
        }
        bool placed = false;
        for (int candidate : ladder) {
            if (!is_forbidden(candidate, forbidden)) {
                phi[static_cast<std::size_t>(v)] = candidate;
                placed = true;
                break;
            }
        }
        if (!placed) throw InternalBoundError("greedy palette ran dry");
        coloured[static_cast<std::size_t>(v)] = 1;
    }
    return phi;
}

DegeneracyResult degeneracy_ordering(const SignedGraph& g) {
    int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    for (VertexId v = 0; v < n; ++v) degree[static_cast<std::size_t>(v)] = g.degree(v);
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> removal;
    removal.reserve(static_cast<std::size_t>(n));
    int degeneracy = 0;
    for (int step = 0; step < n; ++step) {
        VertexId best = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (removed[static_cast<std::size_t>(v)]) continue;
            if (best == -1 ||
                degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(best)]) {
                best = v;
            }
        }
        degeneracy = std::max(degeneracy, degree[static_cast<std::size_t>(best)]);
        removed[static_cast<std::size_t>(best)] = 1;
        removal.push_back(best);
        for (const SignedGraph::IncidentEdge& ie : g.incident(best)) {
            if (ie.to != best && !removed[static_cast<std::size_t>(ie.to)]) {
                degree[static_cast<std::size_t>(ie.to)] -= 1;
            }
        }
    }
    std::reverse(removal.begin(), removal.end());
    return DegeneracyResult{degeneracy, std::move(removal)};
}

namespace {

struct SolverConstraint {
    VertexId vertex = -1;
    ZeroConstraint constraint = ZeroConstraint::ForbidZero;
};

// Backtracking search for a proper colouring within colour_set(n).
// Vertices follow the degeneracy order, candidate colours follow the
// ladder. Only negation-symmetric constraints may be added on top:
// negating a solution is again a solution, so forcing the first-coloured
// vertex to be nonnegative loses nothing.
std::optional<Colouring> solve(const SignedGraph& g, int n,
                               const std::optional<SolverConstraint>& extra) {
    if (n < 1) throw InvalidArgumentError("palette size must be positive");
    int vertex_count = g.vertex_count();
    if (vertex_count == 0) return Colouring{};

    std::vector<VertexId> order = degeneracy_ordering(g).order;
    std::vector<int> position(static_cast<std::size_t>(vertex_count), -1);
    for (int i = 0; i < vertex_count; ++i) {
        position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    }

    // Per position: constraints against earlier positions, plus loop flag.
    struct EarlierEdge {
        int position;
        int sign;
    };
    std::vector<std::vector<EarlierEdge>> earlier(static_cast<std::size_t>(vertex_count));
    std::vector<char> loop_at(static_cast<std::size_t>(vertex_count), 0);
    for (const SignedEdge& e : g.edges()) {
        if (e.is_loop()) {
            loop_at[static_cast<std::size_t>(position[static_cast<std::size_t>(e.u)])] = 1;
            continue;
        }
        int pu = position[static_cast<std::size_t>(e.u)];
        int pv = position[static_cast<std::size_t>(e.v)];
        if (pu > pv) std::swap(pu, pv);
        earlier[static_cast<std::size_t>(pv)].push_back({pu, sign_value(e.sign)});
    }

    std::vector<int> ladder;
    ladder.reserve(static_cast<std::size_t>(n));
    for (int rank = 0; static_cast<int>(ladder.size()) < n; ++rank) {
        int candidate = ladder_value(rank);
        if (in_colour_set(candidate, n)) ladder.push_back(candidate);
    }

    std::vector<int> assigned(static_cast<std::size_t>(vertex_count), 0);
    auto admissible = [&](int pos, int colour) {
        if (loop_at[static_cast<std::size_t>(pos)] && colour == 0) return false;
        if (pos == 0 && colour < 0) return false;  // negation symmetry
        if (extra && order[static_cast<std::size_t>(pos)] == extra->vertex) {
            if (extra->constraint == ZeroConstraint::RequireZero && colour != 0) return false;
            if (extra->constraint == ZeroConstraint::ForbidZero && colour == 0) return false;
        }
        for (const EarlierEdge& ee : earlier[static_cast<std::size_t>(pos)]) {
            if (colour == ee.sign * assigned[static_cast<std::size_t>(ee.position)]) return false;
        }
        return true;
    };

    std::vector<int> choice(static_cast<std::size_t>(vertex_count), -1);
    int pos = 0;
    while (true) {
        int next = choice[static_cast<std::size_t>(pos)] + 1;
        bool placed = false;
        for (; next < n; ++next) {
            if (admissible(pos, ladder[static_cast<std::size_t>(next)])) {
                choice[static_cast<std::size_t>(pos)] = next;
                assigned[static_cast<std::size_t>(pos)] = ladder[static_cast<std::size_t>(next)];
                placed = true;
                break;
            }
        }
        if (!placed) {
            choice[static_cast<std::size_t>(pos)] = -1;
            --pos;
            if (pos < 0) return std::nullopt;
            continue;
        }
        ++pos;
        if (pos == vertex_count) {
            Colouring phi(static_cast<std::size_t>(vertex_count), 0);
            for (int i = 0; i < vertex_count; ++i) {
                phi[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
                    assigned[static_cast<std::size_t>(i)];
            }
            return phi;
        }
    }
}

}  // namespace

std::optional<Colouring> find_n_colouring(const SignedGraph& g, int n) {
    return solve(g, n, std::nullopt);
}

std::optional<Colouring> find_n_colouring(const SignedGraph& g, int n, VertexId vertex,
                                          ZeroConstraint constraint) {
    if (vertex < 0 || vertex >= g.vertex_count()) {
        throw VertexRangeError("constraint vertex out of range");
    }
    return solve(g, n, SolverConstraint{vertex, constraint});
}

ChromaticResult chromatic_number(const SignedGraph& g) {
    if (g.vertex_count() == 0) return ChromaticResult{0, {}};
    int cap = g.max_degree() + 1;  // greedy always succeeds here
    for (int n = 1; n <= cap; ++n) {
        if (std::optional<Colouring> phi = find_n_colouring(g, n)) {
            return ChromaticResult{n, std::move(*phi)};
        }
    }
    throw InternalBoundError("no colouring found within the greedy bound");
}

GammaPair gamma_pair(const SignedGraph& g) {
    GammaPair result;
    if (g.vertex_count() == 0) return result;
    for (int k = 0;; ++k) {
        if (find_n_colouring(g, 2 * k + 1)) {
            result.gamma = k;
            break;
        }
    }
    for (int k = 1;; ++k) {  // k = 0 would need an empty vertex set
        if (find_n_colouring(g, 2 * k)) {
            result.gamma_star = k;
            break;
        }
    }
    return result;
}

}  // namespace sgcol
