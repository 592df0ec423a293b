#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/errors.hpp"

namespace cliquelab {

/// Simple undirected graph with dense vertex ids 0..n-1.
///
/// Immutable after construction: adjacency lists are sorted, symmetric,
/// loop-free and duplicate-free, so instances are safe to share across
/// threads.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (including the
    /// mirrored direction) collapse; the number collapsed is reported via
    /// `duplicates_out` when given. Self-loops and out-of-range endpoints are
    /// rejected.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges,
                            std::size_t* duplicates_out = nullptr) {
        if (vertex_count < 0) throw DataError("negative vertex count");
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
        for (const auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
                throw DataError("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
            if (u == v) throw DataError("self-loop at vertex " + std::to_string(u));
            adj[static_cast<std::size_t>(u)].push_back(v);
            adj[static_cast<std::size_t>(v)].push_back(u);
        }
        std::size_t duplicates = 0;
        std::size_t directed_edges = 0;
        for (auto& neighbors : adj) {
            std::sort(neighbors.begin(), neighbors.end());
            const auto last = std::unique(neighbors.begin(), neighbors.end());
            duplicates += static_cast<std::size_t>(neighbors.end() - last);
            neighbors.erase(last, neighbors.end());
            directed_edges += neighbors.size();
        }
        if (duplicates_out) *duplicates_out = duplicates / 2;
        Graph g;
        g.adjacency_ = std::move(adj);
        g.edge_count_ = directed_edges / 2;
        return g;
    }

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const int> neighbors(int v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        const auto& list = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(list.begin(), list.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) result.emplace_back(u, v);
        return result;
    }

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Dense real symmetric matrix. set() writes both mirror entries, so
/// entries(i,j) == entries(j,i) holds exactly by construction.
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(int order)
        : order_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {
        if (order < 1) throw DataError("matrix order must be >= 1");
    }

    int order() const noexcept { return order_; }

    double at(int i, int j) const { return data_[index(i, j)]; }

    void set(int i, int j, double value) {
        data_[index(i, j)] = value;
        data_[index(j, i)] = value;
    }

    std::span<const double> data() const noexcept { return data_; }

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(order_) +
               static_cast<std::size_t>(j);
    }

    int order_;
    std::vector<double> data_;
};

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
    if (g.vertex_count() == 0) throw DataError("adjacency matrix of empty graph");
    SymmetricMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) m.set(u, v, 1.0);
    return m;
}

inline SymmetricMatrix laplacian_matrix(const Graph& g) {
    if (g.vertex_count() == 0) throw DataError("Laplacian matrix of empty graph");
    SymmetricMatrix m(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u) {
        m.set(u, u, static_cast<double>(g.degree(u)));
        for (int v : g.neighbors(u))
            if (u < v) m.set(u, v, -1.0);
    }
    return m;
}

/// Component label per vertex, labels numbered 0.. in order of the smallest
/// vertex id contained in each component.
inline std::vector<int> connected_components(const Graph& g, int* count_out = nullptr) {
    const int n = g.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    int components = 0;
    for (int start = 0; start < n; ++start) {
        if (label[static_cast<std::size_t>(start)] != -1) continue;
        queue.clear();
        queue.push_back(start);
        label[static_cast<std::size_t>(start)] = components;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int next : g.neighbors(queue[head])) {
                if (label[static_cast<std::size_t>(next)] == -1) {
                    label[static_cast<std::size_t>(next)] = components;
                    queue.push_back(next);
                }
            }
        }
        ++components;
    }
    if (count_out) *count_out = components;
    return label;
}

inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    int count = 0;
    connected_components(g, &count);
    return count == 1;
}

struct ComponentSubgraph {
    Graph graph;
    std::vector<int> original_ids;  // position k holds the source vertex of new id k
};

/// Induced subgraph on the largest connected component. Size ties break
/// toward the component containing the smallest vertex id; new ids keep the
/// ascending order of the original ones.
inline ComponentSubgraph largest_connected_component_mapped(const Graph& g) {
    if (g.vertex_count() == 0) throw DataError("largest component of empty graph");
    int count = 0;
    const std::vector<int> label = connected_components(g, &count);
    std::vector<int> sizes(static_cast<std::size_t>(count), 0);
    for (int lab : label) ++sizes[static_cast<std::size_t>(lab)];
    // Component labels are already ordered by smallest contained vertex id,
    // so the first maximal one realizes the tie-break rule.
    int best = 0;
    for (int c = 1; c < count; ++c)
        if (sizes[static_cast<std::size_t>(c)] > sizes[static_cast<std::size_t>(best)]) best = c;

    ComponentSubgraph result;
    std::vector<int> new_id(label.size(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (label[static_cast<std::size_t>(v)] == best) {
            new_id[static_cast<std::size_t>(v)] = static_cast<int>(result.original_ids.size());
            result.original_ids.push_back(v);
        }
    }
    std::vector<Graph::Edge> edges;
    for (int v : result.original_ids)
        for (int w : g.neighbors(v))
            if (v < w) edges.emplace_back(new_id[static_cast<std::size_t>(v)], new_id[static_cast<std::size_t>(w)]);
    result.graph = Graph::from_edges(static_cast<int>(result.original_ids.size()), edges);
    return result;
}

inline Graph largest_connected_component(const Graph& g) {
    return largest_connected_component_mapped(g).graph;
}

}  // namespace cliquelab
