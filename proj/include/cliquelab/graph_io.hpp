#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquelab/errors.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/text.hpp"

namespace cliquelab {

struct ParseDiagnostics {
    std::size_t duplicate_edges = 0;
    std::vector<std::string> warnings;
};

struct ParsedGraph {
    Graph graph;
    std::vector<long long> original_ids;  // original id of each dense vertex id
    ParseDiagnostics diagnostics;
};

/// Edge-list format: one "u v" pair per line, '#' starts a comment line.
/// Vertex ids are arbitrary integers and get remapped to 0..n-1 in ascending
/// order of the original ids.
inline ParsedGraph parse_edge_list(std::istream& in) {
    std::vector<std::pair<long long, long long>> raw_edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto tokens = tokenize(stripped);
        if (tokens.size() != 2)
            throw ParseError("expected two vertex ids", line_no);
        const long long u = parse_integer(tokens[0], line_no);
        const long long v = parse_integer(tokens[1], line_no);
        if (u == v) throw DataError("self-loop at vertex " + std::to_string(u) +
                                    " (line " + std::to_string(line_no) + ")");
        raw_edges.emplace_back(u, v);
    }

    std::map<long long, int> remap;
    for (const auto& [u, v] : raw_edges) {
        remap.emplace(u, 0);
        remap.emplace(v, 0);
    }
    ParsedGraph result;
    result.original_ids.reserve(remap.size());
    for (auto& [original, dense] : remap) {
        dense = static_cast<int>(result.original_ids.size());
        result.original_ids.push_back(original);
    }
    std::vector<Graph::Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [u, v] : raw_edges) edges.emplace_back(remap[u], remap[v]);
    result.graph = Graph::from_edges(static_cast<int>(result.original_ids.size()), edges,
                                     &result.diagnostics.duplicate_edges);
    return result;
}

inline void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

/// DIMACS clique format: "c" comments, one "p edge N M" header, "e u v"
/// edges with 1-based ids. A header/actual edge-count mismatch is recorded
/// as a warning and the actual count kept.
inline ParsedGraph parse_dimacs(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    long long declared_vertices = -1;
    long long declared_edges = -1;
    std::vector<Graph::Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty() || stripped.front() == 'c') continue;
        const auto tokens = tokenize(stripped);
        if (tokens[0] == "p") {
            if (declared_vertices >= 0) throw ParseError("duplicate problem line", line_no);
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError("expected 'p edge N M'", line_no);
            declared_vertices = parse_integer(tokens[2], line_no);
            declared_edges = parse_integer(tokens[3], line_no);
            if (declared_vertices < 0) throw ParseError("negative vertex count", line_no);
        } else if (tokens[0] == "e") {
            if (declared_vertices < 0)
                throw ParseError("edge before 'p edge' header", line_no);
            if (tokens.size() != 3) throw ParseError("expected 'e u v'", line_no);
            const long long u = parse_integer(tokens[1], line_no);
            const long long v = parse_integer(tokens[2], line_no);
            if (u < 1 || v < 1 || u > declared_vertices || v > declared_vertices)
                throw DataError("vertex id out of range 1.." + std::to_string(declared_vertices) +
                                " (line " + std::to_string(line_no) + ")");
            if (u == v) throw DataError("self-loop at vertex " + std::to_string(u) +
                                        " (line " + std::to_string(line_no) + ")");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError("unrecognized line type '" + std::string(tokens[0]) + "'", line_no);
        }
    }
    if (declared_vertices < 0) throw ParseError("missing 'p edge' header");

    ParsedGraph result;
    result.graph = Graph::from_edges(static_cast<int>(declared_vertices), edges,
                                     &result.diagnostics.duplicate_edges);
    if (static_cast<long long>(result.graph.edge_count()) != declared_edges)
        result.diagnostics.warnings.push_back(
            "header declares " + std::to_string(declared_edges) + " edges, found " +
            std::to_string(result.graph.edge_count()));
    result.original_ids.resize(static_cast<std::size_t>(declared_vertices));
    for (long long v = 0; v < declared_vertices; ++v)
        result.original_ids[static_cast<std::size_t>(v)] = v + 1;
    return result;
}

/// TUDataset bundle: DS_A.txt holds "u, v" pairs with global 1-based node
/// ids, DS_graph_indicator.txt maps each global node to its graph id.
/// Returns one graph per graph id, in graph-id order.
inline std::vector<ParsedGraph> parse_tudataset(std::istream& adjacency, std::istream& indicator) {
    std::vector<int> graph_of_node;  // 0-based graph id per global node, in file order
    std::string line;
    std::size_t line_no = 0;
    int max_graph_id = 0;
    while (std::getline(indicator, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty()) continue;
        const long long id = parse_integer(stripped, line_no);
        if (id < 1) throw DataError("graph indicator must be >= 1 (line " + std::to_string(line_no) + ")");
        graph_of_node.push_back(static_cast<int>(id - 1));
        max_graph_id = std::max(max_graph_id, static_cast<int>(id));
    }
    if (graph_of_node.empty()) throw DataError("empty graph indicator file");

    std::vector<ParsedGraph> result(static_cast<std::size_t>(max_graph_id));
    std::vector<int> local_id(graph_of_node.size());
    {
        std::vector<bool> seen(static_cast<std::size_t>(max_graph_id), false);
        std::vector<int> next_local(static_cast<std::size_t>(max_graph_id), 0);
        for (std::size_t node = 0; node < graph_of_node.size(); ++node) {
            const auto gid = static_cast<std::size_t>(graph_of_node[node]);
            seen[gid] = true;
            local_id[node] = next_local[gid]++;
            result[gid].original_ids.push_back(static_cast<long long>(node + 1));
        }
        for (std::size_t gid = 0; gid < seen.size(); ++gid)
            if (!seen[gid])
                throw DataError("graph indicator gap: no nodes carry graph id " + std::to_string(gid + 1));
    }

    std::vector<std::vector<Graph::Edge>> edges(static_cast<std::size_t>(max_graph_id));
    line_no = 0;
    while (std::getline(adjacency, line)) {
        ++line_no;
        const std::string_view stripped = trim(line);
        if (stripped.empty()) continue;
        const auto parts = split(stripped, ',');
        if (parts.size() != 2) throw ParseError("expected 'u, v'", line_no);
        const long long u = parse_integer(trim(parts[0]), line_no);
        const long long v = parse_integer(trim(parts[1]), line_no);
        if (u < 1 || v < 1 || u > static_cast<long long>(graph_of_node.size()) ||
            v > static_cast<long long>(graph_of_node.size()))
            throw DataError("node id out of range (line " + std::to_string(line_no) + ")");
        const int gu = graph_of_node[static_cast<std::size_t>(u - 1)];
        const int gv = graph_of_node[static_cast<std::size_t>(v - 1)];
        if (gu != gv)
            throw DataError("edge between graphs " + std::to_string(gu + 1) + " and " +
                            std::to_string(gv + 1) + " (line " + std::to_string(line_no) + ")");
        if (u == v) throw DataError("self-loop at node " + std::to_string(u) +
                                    " (line " + std::to_string(line_no) + ")");
        edges[static_cast<std::size_t>(gu)].emplace_back(local_id[static_cast<std::size_t>(u - 1)],
                                                         local_id[static_cast<std::size_t>(v - 1)]);
    }
    for (std::size_t gid = 0; gid < result.size(); ++gid)
        result[gid].graph = Graph::from_edges(static_cast<int>(result[gid].original_ids.size()),
                                              edges[gid], &result[gid].diagnostics.duplicate_edges);
    return result;
}

}  // namespace cliquelab
