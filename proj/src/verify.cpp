#include "sgcol/verify.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <numeric>
#include <queue>
#include <sstream>
#include <thread>

#include "sgcol/brooks.hpp"
#include "sgcol/colouring.hpp"
#include "sgcol/io.hpp"
#include "sgcol/structure.hpp"

namespace sgcol {

namespace {

std::vector<std::pair<VertexId, VertexId>> vertex_pairs(int n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

int component_count(int n, const std::vector<std::pair<VertexId, VertexId>>& pairs,
                    const std::vector<int>& mult) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    int components = n;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (mult[p] == 0) continue;
        int a = find(pairs[p].first);
        int b = find(pairs[p].second);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    return components;
}

struct UnderlyingTask {
    int n = 0;
    std::vector<int> mult;
    long long signature_count = 0;
    long long offset = 0;
};

void check_cap(const EnumerationSpec& spec) {
    if (spec.max_vertices > kEnumerationHardCap && !spec.long_run) {
        throw CapExceededError("exhaustive runs beyond " +
                               std::to_string(kEnumerationHardCap) +
                               " vertices need the long-run flag");
    }
}

std::vector<UnderlyingTask> build_tasks(const EnumerationSpec& spec) {
    check_cap(spec);
    std::vector<UnderlyingTask> tasks;
    long long offset = 0;
    int base = spec.simple_only ? 2 : 3;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        std::vector<std::pair<VertexId, VertexId>> pairs = vertex_pairs(n);
        std::vector<int> mult(pairs.size(), 0);
        while (true) {
            int components = component_count(n, pairs, mult);
            if (!spec.connected_only || components == 1) {
                int m = std::accumulate(mult.begin(), mult.end(), 0);
                int cotree = m - (n - components);
                UnderlyingTask task;
                task.n = n;
                task.mult = mult;
                task.signature_count = 1LL << cotree;
                task.offset = offset;
                offset += task.signature_count;
                tasks.push_back(std::move(task));
            }
            // little-endian multiplicity counter
            std::size_t p = 0;
            for (; p < mult.size(); ++p) {
                if (++mult[p] < base) break;
                mult[p] = 0;
            }
            if (p == mult.size()) break;
        }
    }
    return tasks;
}

std::vector<UnderlyingTask> complete_graph_tasks(const EnumerationSpec& spec) {
    check_cap(spec);
    std::vector<UnderlyingTask> tasks;
    long long offset = 0;
    for (int n = 1; n <= spec.max_vertices; ++n) {
        std::size_t pair_count = vertex_pairs(n).size();
        UnderlyingTask task;
        task.n = n;
        task.mult.assign(pair_count, 1);
        task.signature_count = 1LL << (static_cast<int>(pair_count) - (n - 1));
        task.offset = offset;
        offset += task.signature_count;
        tasks.push_back(std::move(task));
    }
    return tasks;
}

struct PreparedTask {
    SignedGraph base;
    std::vector<int> cotree_edges;
};

PreparedTask prepare(const UnderlyingTask& task) {
    std::vector<std::pair<VertexId, VertexId>> pairs = vertex_pairs(task.n);
    std::vector<SignedEdge> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        for (int copy = 0; copy < task.mult[p]; ++copy) {
            edges.push_back({pairs[p].first, pairs[p].second, Sign::Plus});
        }
    }
    SignedGraph base(task.n, std::move(edges));

    // Breadth-first spanning forest; the remaining edges carry the
    // enumerated signs.
    std::vector<char> in_tree(static_cast<std::size_t>(base.edge_count()), 0);
    std::vector<char> seen(static_cast<std::size_t>(task.n), 0);
    for (VertexId root = 0; root < task.n; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = 1;
        std::queue<VertexId> queue;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (const SignedGraph::IncidentEdge& ie : base.incident(v)) {
                if (!seen[static_cast<std::size_t>(ie.to)]) {
                    seen[static_cast<std::size_t>(ie.to)] = 1;
                    in_tree[static_cast<std::size_t>(ie.edge_index)] = 1;
                    queue.push(ie.to);
                }
            }
        }
    }
    std::vector<int> cotree;
    for (int e = 0; e < base.edge_count(); ++e) {
        if (!in_tree[static_cast<std::size_t>(e)]) cotree.push_back(e);
    }
    return PreparedTask{std::move(base), std::move(cotree)};
}

SignedGraph instantiate(const PreparedTask& prepared, long long mask) {
    std::vector<SignedEdge> edges = prepared.base.edges();
    for (std::size_t t = 0; t < prepared.cotree_edges.size(); ++t) {
        if ((mask >> t) & 1) {
            edges[static_cast<std::size_t>(prepared.cotree_edges[t])].sign = Sign::Minus;
        }
    }
    return SignedGraph(prepared.base.vertex_count(), std::move(edges));
}

}  // namespace

long long enumerate_signed_graphs(const EnumerationSpec& spec,
                                  const std::function<bool(const SignedGraph&)>& visit) {
    std::vector<UnderlyingTask> tasks = build_tasks(spec);
    long long emitted = 0;
    for (const UnderlyingTask& task : tasks) {
        PreparedTask prepared = prepare(task);
        for (long long mask = 0; mask < task.signature_count; ++mask) {
            ++emitted;
            if (!visit(instantiate(prepared, mask))) return emitted;
        }
    }
    return emitted;
}

namespace {

// Per-instance predicate; empty result means the instance passed.
using InstanceCheck =
    std::function<std::optional<std::string>(const SignedGraph&, long long index)>;
// Built once per underlying graph so expensive signature-independent
// values are computed a single time.
using CheckFactory = std::function<InstanceCheck(const SignedGraph& underlying)>;

struct Failure {
    long long index = LLONG_MAX;
    std::optional<Counterexample> counterexample;
};

VerificationReport run_corpus(const std::string& id, const std::vector<UnderlyingTask>& tasks,
                              const VerifyOptions& options, const CheckFactory& factory) {
    VerificationReport report;
    report.theorem_id = id;
    long long total = tasks.empty() ? 0 : tasks.back().offset + tasks.back().signature_count;

    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (const UnderlyingTask& task : tasks) {
            PreparedTask prepared = prepare(task);
            InstanceCheck check = factory(prepared.base);
            for (long long mask = 0; mask < task.signature_count; ++mask) {
                long long index = task.offset + mask;
                SignedGraph g = instantiate(prepared, mask);
                std::optional<std::string> failure = check(g, index);
                if (options.instance_log) {
                    std::ostringstream line;
                    line << "index=" << index << " n=" << g.vertex_count()
                         << " m=" << g.edge_count() << " status="
                         << (failure ? "fail" : "ok");
                    options.instance_log(line.str());
                }
                if (failure) {
                    report.passed = false;
                    report.instances_checked = index + 1;
                    report.counterexample = Counterexample{std::move(g), std::move(*failure)};
                    return report;
                }
            }
        }
        report.instances_checked = total;
        return report;
    }

    std::atomic<long long> first_failure{LLONG_MAX};
    std::mutex merge_mutex;
    Failure best;
    auto worker = [&](int stripe) {
        Failure local;
        for (std::size_t t = static_cast<std::size_t>(stripe); t < tasks.size();
             t += static_cast<std::size_t>(jobs)) {
            const UnderlyingTask& task = tasks[t];
            if (task.offset >= first_failure.load(std::memory_order_relaxed)) continue;
            PreparedTask prepared = prepare(task);
            InstanceCheck check = factory(prepared.base);
            for (long long mask = 0; mask < task.signature_count; ++mask) {
                long long index = task.offset + mask;
                if (index >= first_failure.load(std::memory_order_relaxed)) break;
                SignedGraph g = instantiate(prepared, mask);
                if (std::optional<std::string> failure = check(g, index)) {
                    if (index < local.index) {
                        local.index = index;
                        local.counterexample = Counterexample{std::move(g), std::move(*failure)};
                    }
                    long long seen = first_failure.load(std::memory_order_relaxed);
                    while (index < seen &&
                           !first_failure.compare_exchange_weak(seen, index)) {
                    }
                    break;
                }
            }
        }
        if (local.counterexample) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            if (local.index < best.index) best = std::move(local);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (std::thread& thread : threads) thread.join();

    if (best.counterexample) {
        report.passed = false;
        report.instances_checked = best.index + 1;
        report.counterexample = std::move(best.counterexample);
    } else {
        report.instances_checked = total;
    }
    return report;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

SwitchSet pseudo_random_switch(long long index, int n) {
    std::uint64_t bits = splitmix64(static_cast<std::uint64_t>(index) + 1);
    std::vector<VertexId> vertices;
    for (VertexId v = 0; v < n; ++v) {
        if ((bits >> (v % 64)) & 1) vertices.push_back(v);
        if (v % 64 == 63) bits = splitmix64(bits);
    }
    return SwitchSet(std::move(vertices));
}

std::optional<std::string> brooks_check(const SignedGraph& g) {
    ExceptionalClass cls = classify_exceptional(g);
    int delta = g.max_degree();
    int chi = chromatic_number(g).chi;
    if (cls == ExceptionalClass::None) {
        if (chi > delta) {
            return "chi=" + std::to_string(chi) + " exceeds max degree " + std::to_string(delta) +
                   " on a non-exceptional graph";
        }
    } else if (chi != delta + 1) {
        return std::string("exceptional graph (") + exceptional_name(cls) + ") has chi=" +
               std::to_string(chi) + ", expected " + std::to_string(delta + 1);
    }
    BrooksCertificate cert = brooks_colour(g);
    if (cert.exceptional != cls) {
        return std::string("certificate class ") + exceptional_name(cert.exceptional) +
               " disagrees with " + exceptional_name(cls);
    }
    if (chi > cert.bound_used) {
        return "certificate bound " + std::to_string(cert.bound_used) + " below chi=" +
               std::to_string(chi);
    }
    return std::nullopt;
}

VerificationReport verify_sharpness(const VerifyOptions& options) {
    VerificationReport report;
    report.theorem_id = "sharpness";
    for (int n = 2; n <= 3; ++n) {
        SignedGraph g = construct_sharpness_graph(n);
        ++report.instances_checked;
        int chi = chromatic_number(g).chi;
        int chi_underlying = chromatic_number(g.underlying_simple()).chi;
        std::optional<std::string> failure;
        if (chi != 2 * n - 1) {
            failure = "chi=" + std::to_string(chi) + ", expected " + std::to_string(2 * n - 1);
        } else if (chi_underlying != n) {
            failure = "underlying chi=" + std::to_string(chi_underlying) + ", expected " +
                      std::to_string(n);
        }
        if (options.instance_log) {
            options.instance_log("block-size=" + std::to_string(n) + " chi=" +
                                 std::to_string(chi) + " status=" + (failure ? "fail" : "ok"));
        }
        if (failure) {
            report.passed = false;
            report.counterexample = Counterexample{std::move(g), std::move(*failure)};
            return report;
        }
    }
    return report;
}

VerificationReport verify_planar_conjecture(const VerifyOptions& options) {
    VerificationReport report;
    report.theorem_id = "planar_conjecture";
    for (const std::string& path : options.planar_files) {
        std::ifstream in(path);
        if (!in) throw InvalidArgumentError("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        SignedGraph g = parse_graph_file(buffer.str());
        ++report.instances_checked;
        std::optional<std::string> failure;
        int n = g.vertex_count();
        int m = g.edge_count();
        if (!g.is_simple()) {
            failure = path + ": not simple";
        } else if (n >= 3 && m > 3 * n - 6) {
            failure = path + ": violates the planar edge bound m <= 3n-6";
        } else {
            int chi = chromatic_number(g).chi;
            if (chi > 4) failure = path + ": chi=" + std::to_string(chi) + " exceeds 4";
        }
        if (options.instance_log) {
            options.instance_log("file=" + path + " status=" + (failure ? "fail" : "ok"));
        }
        if (failure) {
            report.passed = false;
            report.counterexample = Counterexample{std::move(g), std::move(*failure)};
            return report;
        }
    }
    return report;
}

}  // namespace

const std::vector<std::string>& known_theorem_ids() {
    static const std::vector<std::string> ids = {
        "brooks",     "bound_2chi", "antibalance",          "gamma_identity",
        "complete",   "degeneracy", "sharpness",            "switching_invariance",
        "planar_conjecture"};
    return ids;
}

VerificationReport verify_theorem(const std::string& theorem_id, const EnumerationSpec& spec,
                                  const VerifyOptions& options) {
    if (theorem_id == "sharpness") return verify_sharpness(options);
    if (theorem_id == "planar_conjecture") return verify_planar_conjecture(options);

    EnumerationSpec corpus = spec;
    CheckFactory factory;
    bool complete_corpus = false;

    if (theorem_id == "brooks") {
        corpus.connected_only = true;
        corpus.simple_only = true;
        factory = [](const SignedGraph&) -> InstanceCheck {
            return [](const SignedGraph& g, long long) { return brooks_check(g); };
        };
    } else if (theorem_id == "bound_2chi") {
        corpus.connected_only = false;
        corpus.simple_only = false;
        factory = [](const SignedGraph& underlying) -> InstanceCheck {
            int chi_simple = chromatic_number(underlying.underlying_simple()).chi;
            return [chi_simple](const SignedGraph& g, long long) -> std::optional<std::string> {
                int chi = chromatic_number(g).chi;
                if (chi > 2 * chi_simple - 1) {
                    return "chi=" + std::to_string(chi) + " exceeds 2*" +
                           std::to_string(chi_simple) + "-1";
                }
                return std::nullopt;
            };
        };
    } else if (theorem_id == "antibalance") {
        corpus.connected_only = false;
        corpus.simple_only = false;
        factory = [](const SignedGraph&) -> InstanceCheck {
            return [](const SignedGraph& g, long long) -> std::optional<std::string> {
                bool two_colourable = find_n_colouring(g, 2).has_value();
                bool antibalanced = is_antibalanced(g);
                if (two_colourable != antibalanced) {
                    return std::string("2-colourable=") + (two_colourable ? "yes" : "no") +
                           " but antibalanced=" + (antibalanced ? "yes" : "no");
                }
                return std::nullopt;
            };
        };
    } else if (theorem_id == "gamma_identity") {
        corpus.connected_only = false;
        corpus.simple_only = false;
        factory = [](const SignedGraph&) -> InstanceCheck {
            return [](const SignedGraph& g, long long) -> std::optional<std::string> {
                GammaPair gp = gamma_pair(g);
                int chi = chromatic_number(g).chi;
                if (gp.gamma + gp.gamma_star != chi) {
                    return "gamma=" + std::to_string(gp.gamma) + " gamma*=" +
                           std::to_string(gp.gamma_star) + " but chi=" + std::to_string(chi);
                }
                return std::nullopt;
            };
        };
    } else if (theorem_id == "complete") {
        complete_corpus = true;
        factory = [](const SignedGraph& underlying) -> InstanceCheck {
            int n = underlying.vertex_count();
            return [n](const SignedGraph& g, long long) -> std::optional<std::string> {
                bool balanced = is_balanced(g).balanced;
                int chi = chromatic_number(g).chi;
                if (balanced ? chi != n : chi > n - 1) {
                    return std::string(balanced ? "balanced" : "unbalanced") + " K" +
                           std::to_string(n) + " has chi=" + std::to_string(chi);
                }
                Colouring phi = colour_complete(g);  // verified internally
                if (!colouring_within(phi, balanced ? n : n - 1)) {
                    return "constructive colouring left its palette";
                }
                return std::nullopt;
            };
        };
    } else if (theorem_id == "degeneracy") {
        corpus.connected_only = false;
        corpus.simple_only = false;
        factory = [](const SignedGraph&) -> InstanceCheck {
            return [](const SignedGraph& g, long long) -> std::optional<std::string> {
                DegeneracyResult deg = degeneracy_ordering(g);
                Colouring phi = greedy_colour(g, deg.order);
                if (check_proper(g, phi)) return std::string("greedy colouring not proper");
                if (!colouring_within(phi, deg.degeneracy + 1)) {
                    return "greedy colouring left colour_set(" +
                           std::to_string(deg.degeneracy + 1) + ")";
                }
                return std::nullopt;
            };
        };
    } else if (theorem_id == "switching_invariance") {
        corpus.connected_only = false;
        corpus.simple_only = false;
        factory = [](const SignedGraph&) -> InstanceCheck {
            return [](const SignedGraph& g, long long index) -> std::optional<std::string> {
                SwitchSet s = pseudo_random_switch(index, g.vertex_count());
                SignedGraph h = switched(g, s);
                ChromaticResult before = chromatic_number(g);
                ChromaticResult after = chromatic_number(h);
                if (before.chi != after.chi) {
                    return "chi changed from " + std::to_string(before.chi) + " to " +
                           std::to_string(after.chi) + " under switching";
                }
                if (check_proper(h, switch_colouring(before.witness, s))) {
                    return std::string("switched witness is not proper on the switched graph");
                }
                Colouring ones(static_cast<std::size_t>(g.vertex_count()), 1);
                bool improper_before = check_proper(g, ones).has_value();
                bool improper_after = check_proper(h, switch_colouring(ones, s)).has_value();
                if (improper_before != improper_after) {
                    return std::string("properness status not preserved under switching");
                }
                return std::nullopt;
            };
        };
    } else {
        throw UnknownTheoremError("unknown theorem id: " + theorem_id);
    }

    std::vector<UnderlyingTask> tasks =
        complete_corpus ? complete_graph_tasks(corpus) : build_tasks(corpus);
    return run_corpus(theorem_id, tasks, options, factory);
}

std::string render_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "theorem=" << report.theorem_id << " instances=" << report.instances_checked
        << " result=" << (report.passed ? "PASS" : "FAIL") << "\n";
    if (report.counterexample) {
        out << "counterexample: " << report.counterexample->details << "\n";
        out << render_graph(report.counterexample->graph);
    }
    return out.str();
}

}  // namespace sgcol
