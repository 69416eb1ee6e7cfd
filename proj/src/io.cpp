#include "sgcol/io.hpp"

#include <sstream>

namespace sgcol {

namespace {

// Data lines with their 1-based line numbers, comments and blanks removed.
std::vector<std::pair<int, std::string>> data_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) lines.emplace_back(number, line);
    }
    return lines;
}

}  // namespace

SignedGraph parse_graph_file(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines = data_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");

    std::istringstream header(lines[0].second);
    int n = 0;
    int m = 0;
    std::string extra;
    if (!(header >> n >> m) || (header >> extra)) {
        throw ParseError(lines[0].first, "expected header \"n m\"");
    }
    if (n < 0 || m < 0) throw ParseError(lines[0].first, "counts must be nonnegative");
    if (static_cast<int>(lines.size()) - 1 != m) {
        throw ParseError(lines.empty() ? 1 : lines.back().first,
                         "expected " + std::to_string(m) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    }

    std::vector<SignedEdge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const auto& [line_number, content] = lines[static_cast<std::size_t>(i)];
        std::istringstream in(content);
        int u = 0;
        int v = 0;
        std::string sign_token;
        if (!(in >> u >> v >> sign_token) || (in >> extra)) {
            throw ParseError(line_number, "expected edge line \"u v s\"");
        }
        if (sign_token != "+" && sign_token != "-") {
            throw ParseError(line_number, "edge sign must be + or -");
        }
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw ParseError(line_number, "edge endpoint out of range");
        }
        Sign sign = sign_token == "+" ? Sign::Plus : Sign::Minus;
        if (u == v && sign == Sign::Plus) {
            throw ParseError(line_number, "positive loop at vertex " + std::to_string(u));
        }
        edges.push_back({u, v, sign});
    }
    return SignedGraph(n, std::move(edges));
}

std::string render_graph(const SignedGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const SignedEdge& e : g.edges()) {
        out << e.u << ' ' << e.v << ' ' << sign_char(e.sign) << '\n';
    }
    return out.str();
}

Colouring parse_colouring_file(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines = data_lines(text);
    Colouring phi;
    phi.reserve(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& [line_number, content] = lines[i];
        std::istringstream in(content);
        int v = 0;
        int colour = 0;
        std::string extra;
        if (!(in >> v >> colour) || (in >> extra)) {
            throw ParseError(line_number, "expected colouring line \"v c\"");
        }
        if (v != static_cast<int>(i)) {
            throw ParseError(line_number,
                             "expected vertex " + std::to_string(i) + ", found " +
                                 std::to_string(v));
        }
        phi.push_back(colour);
    }
    return phi;
}

std::string render_colouring(const Colouring& phi) {
    std::ostringstream out;
    for (std::size_t v = 0; v < phi.size(); ++v) {
        out << v << ' ' << phi[v] << '\n';
    }
    return out.str();
}

PartitionFile parse_partition_file(const std::string& text) {
    std::vector<std::pair<int, std::string>> lines = data_lines(text);
    PartitionFile file;
    int section = 0;  // 0 = none, 1.. = part index, -1 = forest1, -2 = forest2
    bool section_open = false;
    for (const auto& [line_number, content] : lines) {
        std::istringstream in(content);
        std::string first;
        in >> first;
        if (first == "PART") {
            std::string label;
            if (!(in >> label) || label.back() != ':') {
                throw ParseError(line_number, "expected \"PART i:\"");
            }
            label.pop_back();
            int index = 0;
            try {
                index = std::stoi(label);
            } catch (const std::exception&) {
                throw ParseError(line_number, "part label must be an integer");
            }
            if (index != static_cast<int>(file.parts.size()) + 1) {
                throw ParseError(line_number, "parts must be numbered consecutively from 1");
            }
            if (file.has_forests) {
                throw ParseError(line_number, "cannot mix PART and FOREST sections");
            }
            file.has_parts = true;
            file.parts.emplace_back();
            section = index;
            section_open = true;
            continue;
        }
        if (first == "FOREST1:" || first == "FOREST2:") {
            if (file.has_parts) {
                throw ParseError(line_number, "cannot mix PART and FOREST sections");
            }
            file.has_forests = true;
            section = first == "FOREST1:" ? -1 : -2;
            section_open = true;
            continue;
        }
        if (!section_open) {
            throw ParseError(line_number, "content before the first section header");
        }
        std::istringstream rest(content);
        if (section > 0) {
            int v = 0;
            while (rest >> v) file.parts.back().push_back(v);
            if (!rest.eof()) throw ParseError(line_number, "expected vertex indices");
        } else {
            int u = 0;
            int v = 0;
            std::string extra;
            if (!(rest >> u >> v) || (rest >> extra)) {
                throw ParseError(line_number, "expected edge line \"u v\"");
            }
            (section == -1 ? file.forest1 : file.forest2).emplace_back(u, v);
        }
    }
    if (!file.has_parts && !file.has_forests) {
        throw ParseError(1, "partition file has no sections");
    }
    return file;
}

}  // namespace sgcol
