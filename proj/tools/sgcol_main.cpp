// Command-line front end: parse graph and partition files, run the
// colouring algorithms, and print colourings and verification reports.
//
// Exit codes: 0 success, 1 infeasible result or failed verification,
// 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgcol/brooks.hpp"
#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"
#include "sgcol/io.hpp"
#include "sgcol/structure.hpp"
#include "sgcol/verify.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sgcol::InvalidArgumentError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

sgcol::SignedGraph load_graph(const std::string& path) {
    return sgcol::parse_graph_file(read_file(path));
}

// Colourings are re-checked before printing; exit 0 only on verified output.
int print_validated(const sgcol::SignedGraph& g, const sgcol::Colouring& phi) {
    if (auto violation = sgcol::check_proper(g, phi)) {
        const sgcol::SignedEdge& e = g.edge(*violation);
        std::cerr << "internal error: colouring violates edge " << e.u << ' ' << e.v << ' '
                  << sgcol::sign_char(e.sign) << "\n";
        return kExitFailure;
    }
    std::cout << sgcol::render_colouring(phi);
    return kExitSuccess;
}

int run_chi(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    sgcol::ChromaticResult result = sgcol::chromatic_number(g);
    std::cout << "chi " << result.chi << "\n";
    if (g.vertex_count() == 0) return kExitSuccess;
    return print_validated(g, result.witness);
}

int run_colour(const std::string& path, int n) {
    sgcol::SignedGraph g = load_graph(path);
    if (auto phi = sgcol::find_n_colouring(g, n)) {
        return print_validated(g, *phi);
    }
    std::cout << "infeasible\n";
    return kExitFailure;
}

int run_brooks(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    sgcol::BrooksCertificate cert = sgcol::brooks_colour(g);
    std::cout << "class " << sgcol::exceptional_name(cert.exceptional) << "\n";
    std::cout << "bound " << cert.bound_used << "\n";
    return print_validated(g, cert.colouring);
}

int run_complete(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    sgcol::Colouring phi = sgcol::colour_complete(g);
    return print_validated(g, phi);
}

int run_balance(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    sgcol::BalanceReport report = sgcol::is_balanced(g);
    if (report.balanced) {
        std::cout << "balanced\nswitch:";
        for (sgcol::VertexId v : report.witness_switch.vertices()) std::cout << ' ' << v;
        std::cout << "\n";
        return kExitSuccess;
    }
    std::cout << "unbalanced\ncircuit:\n";
    for (int e : report.witness_circuit) {
        const sgcol::SignedEdge& edge = g.edge(e);
        std::cout << edge.u << ' ' << edge.v << ' ' << sgcol::sign_char(edge.sign) << "\n";
    }
    return kExitFailure;
}

int run_antibalance(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    bool antibalanced = sgcol::is_antibalanced(g);
    std::cout << (antibalanced ? "antibalanced" : "not antibalanced") << "\n";
    return antibalanced ? kExitSuccess : kExitFailure;
}

int run_gamma(const std::string& path) {
    sgcol::SignedGraph g = load_graph(path);
    sgcol::GammaPair gp = sgcol::gamma_pair(g);
    std::cout << "gamma " << gp.gamma << "\n";
    std::cout << "gamma_star " << gp.gamma_star << "\n";
    return kExitSuccess;
}

int run_construct_gn(int n) {
    std::cout << sgcol::render_graph(sgcol::construct_sharpness_graph(n));
    return kExitSuccess;
}

int run_verify(const std::string& theorem, int max_vertices, bool long_run,
               const std::string& planar_dir, int jobs, bool verbose) {
    sgcol::EnumerationSpec spec;
    spec.max_vertices = max_vertices;
    spec.long_run = long_run;
    sgcol::VerifyOptions options;
    options.jobs = jobs;
    if (!planar_dir.empty()) {
        std::vector<std::string> files;
        for (const auto& entry : std::filesystem::directory_iterator(planar_dir)) {
            if (entry.path().extension() == ".sg") files.push_back(entry.path().string());
        }
        std::sort(files.begin(), files.end());
        options.planar_files = std::move(files);
    }
    if (verbose) {
        options.jobs = 1;  // keeps per-instance lines in stream order
        options.instance_log = [](const std::string& line) { std::cout << line << "\n"; };
    }
    sgcol::VerificationReport report = sgcol::verify_theorem(theorem, spec, options);
    std::cout << sgcol::render_report(report);
    return report.passed ? kExitSuccess : kExitFailure;
}

std::vector<int> edge_ids_for(const sgcol::SignedGraph& g,
                              const std::vector<std::pair<int, int>>& endpoints) {
    std::vector<char> used(static_cast<std::size_t>(g.edge_count()), 0);
    std::vector<int> ids;
    for (const auto& [u, v] : endpoints) {
        int found = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            const sgcol::SignedEdge& edge = g.edge(e);
            bool match = (edge.u == u && edge.v == v) || (edge.u == v && edge.v == u);
            if (match && !used[static_cast<std::size_t>(e)]) {
                found = e;
                break;
            }
        }
        if (found == -1) {
            throw sgcol::InvalidPartitionError("partition names a missing edge " +
                                               std::to_string(u) + " " + std::to_string(v));
        }
        used[static_cast<std::size_t>(found)] = 1;
        ids.push_back(found);
    }
    return ids;
}

int run_from_partition(const std::string& graph_path, const std::string& partition_path,
                       const std::string& kind) {
    sgcol::SignedGraph g = load_graph(graph_path);
    sgcol::PartitionFile file = sgcol::parse_partition_file(read_file(partition_path));
    sgcol::Colouring phi;
    if (kind == "vertex-forests") {
        if (!file.has_parts) throw sgcol::InvalidPartitionError("expected PART sections");
        phi = sgcol::colour_from_vertex_forest_partition(g,
                                                         sgcol::VertexForestPartition{file.parts});
    } else if (kind == "two-edge-forests") {
        if (!file.has_forests) throw sgcol::InvalidPartitionError("expected FOREST sections");
        sgcol::EdgeForestPair pair;
        pair.forest1 = edge_ids_for(g, file.forest1);
        pair.forest2 = edge_ids_for(g, file.forest2);
        phi = sgcol::colour_from_two_edge_forests(g, pair);
    } else if (kind == "independent-forest") {
        if (!file.has_parts || file.parts.size() != 2) {
            throw sgcol::InvalidPartitionError(
                "expected PART 1 (independent set) and PART 2 (forest)");
        }
        sgcol::IndependentForestPartition partition{file.parts[0], file.parts[1]};
        phi = sgcol::colour_from_independent_forest_partition(g, partition);
    } else {
        std::cerr << "unknown partition kind: " << kind << "\n";
        return kExitUsage;
    }
    return print_validated(g, phi);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed graph colouring toolkit"};
    app.require_subcommand(1);

    std::string file;
    std::string partition_path;
    std::string kind;
    std::string theorem;
    std::string planar_dir;
    int palette = 0;
    int gn_size = 0;
    int max_vertices = 4;
    int jobs = 1;
    bool long_run = false;
    bool verbose = false;

    CLI::App* chi = app.add_subcommand("chi", "chromatic number and witness colouring");
    chi->add_option("file", file)->required();

    CLI::App* colour = app.add_subcommand("colour", "find a colouring within a given palette");
    colour->add_option("file", file)->required();
    colour->add_option("--n", palette, "palette size")->required();

    CLI::App* brooks = app.add_subcommand("brooks", "constructive max-degree colouring");
    brooks->add_option("file", file)->required();

    CLI::App* complete = app.add_subcommand("complete", "colour a signed complete graph");
    complete->add_option("file", file)->required();

    CLI::App* balance = app.add_subcommand("balance", "balance test with witness");
    balance->add_option("file", file)->required();

    CLI::App* antibalance = app.add_subcommand("antibalance", "antibalance test");
    antibalance->add_option("file", file)->required();

    CLI::App* gamma = app.add_subcommand("gamma", "odd and zero-free palette thresholds");
    gamma->add_option("file", file)->required();

    CLI::App* construct = app.add_subcommand("construct-gn", "emit the sharpness family member");
    construct->add_option("n", gn_size)->required();

    CLI::App* verify = app.add_subcommand("verify", "exhaustive theorem verification");
    verify->add_option("theorem", theorem)->required();
    verify->add_option("--max-vertices", max_vertices, "corpus size cap");
    verify->add_flag("--long-run", long_run, "allow runs beyond the hard cap");
    verify->add_option("--planar-dir", planar_dir, "directory of .sg files (planar_conjecture)");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_flag("-v,--verbose", verbose, "one summary line per instance");

    CLI::App* from_partition =
        app.add_subcommand("from-partition", "colour from a supplied partition");
    from_partition->add_option("file", file)->required();
    from_partition->add_option("--partition", partition_path)->required();
    from_partition
        ->add_option("--kind", kind, "vertex-forests | two-edge-forests | independent-forest")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*chi) return run_chi(file);
        if (*colour) return run_colour(file, palette);
        if (*brooks) return run_brooks(file);
        if (*complete) return run_complete(file);
        if (*balance) return run_balance(file);
        if (*antibalance) return run_antibalance(file);
        if (*gamma) return run_gamma(file);
        if (*construct) return run_construct_gn(gn_size);
        if (*verify) return run_verify(theorem, max_vertices, long_run, planar_dir, jobs, verbose);
        if (*from_partition) return run_from_partition(file, partition_path, kind);
    } catch (const sgcol::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sgcol::UnknownTheoremError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const sgcol::CapExceededError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const sgcol::InvalidArgumentError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const sgcol::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
