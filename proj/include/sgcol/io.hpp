#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sgcol/colouring.hpp"
#include "sgcol/graph.hpp"

namespace sgcol {

/// Graph file grammar: '#' starts a comment, blank lines are skipped.
/// First data line is "n m", followed by exactly m lines "u v s" with
/// s in {+, -} and 0-based endpoints.
SignedGraph parse_graph_file(const std::string& text);

/// Canonical text form; parse_graph_file(render_graph(g)) == g.
std::string render_graph(const SignedGraph& g);

/// Colouring file: one line "v c" per vertex, sorted by v from 0.
Colouring parse_colouring_file(const std::string& text);

std::string render_colouring(const Colouring& phi);

/// Partition file: either "PART i:" sections followed by vertex indices,
/// or "FOREST1:" / "FOREST2:" sections followed by "u v" edge lines.
struct PartitionFile {
    std::vector<std::vector<VertexId>> parts;
    std::vector<std::pair<VertexId, VertexId>> forest1;
    std::vector<std::pair<VertexId, VertexId>> forest2;
    bool has_parts = false;
    bool has_forests = false;
};

PartitionFile parse_partition_file(const std::string& text);

}  // namespace sgcol
