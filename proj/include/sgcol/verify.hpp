#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sgcol/graph.hpp"

namespace sgcol {

/// Exhaustive runs above this many vertices must opt in via long_run.
inline constexpr int kEnumerationHardCap = 6;

struct EnumerationSpec {
    int max_vertices = 4;
    bool connected_only = false;
    bool simple_only = true;
    bool long_run = false;
};

/// Emits one signed graph per switching class of every labelled
/// underlying graph on 1..max_vertices vertices. With simple_only off the
/// universe is loopless multigraphs with at most two parallel edges per
/// vertex pair. Spanning-forest edges carry +, co-tree signs are
/// enumerated. Order is deterministic: vertex count ascending, then the
/// underlying multiplicity counter, then the co-tree sign mask.
/// The visitor returns false to stop early. Returns instances emitted.
long long enumerate_signed_graphs(const EnumerationSpec& spec,
                                  const std::function<bool(const SignedGraph&)>& visit);

struct Counterexample {
    SignedGraph graph;
    std::string details;
};

struct VerificationReport {
    std::string theorem_id;
    long long instances_checked = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;
};

struct VerifyOptions {
    int jobs = 1;
    /// Graph files for planar_conjecture.
    std::vector<std::string> planar_files;
    /// Per-instance summary sink; honoured only with jobs == 1.
    std::function<void(const std::string&)> instance_log;
};

const std::vector<std::string>& known_theorem_ids();

/// Runs one theorem's predicate over its corpus. Each theorem fixes its
/// own corpus filters; spec supplies max_vertices and long_run. Stops at
/// the first counterexample in enumeration order.
VerificationReport verify_theorem(const std::string& theorem_id, const EnumerationSpec& spec,
                                  const VerifyOptions& options = {});

std::string render_report(const VerificationReport& report);

}  // namespace sgcol
