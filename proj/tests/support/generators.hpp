#pragma once

// Seeded generators shared by the unit and acceptance suites.

#include <cstdint>
#include <utility>
#include <vector>

#include "cliquelab/graph.hpp"
#include "cliquelab/rng.hpp"

namespace testgen {

inline cliquelab::Graph gnp(int n, double p, std::uint64_t seed) {
    cliquelab::Rng rng(seed);
    std::vector<cliquelab::Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p) edges.emplace_back(u, v);
    return cliquelab::Graph::from_edges(n, edges);
}

inline cliquelab::SymmetricMatrix random_symmetric(int order, std::uint64_t seed,
                                                   double scale = 1.0) {
    cliquelab::Rng rng(seed);
    cliquelab::SymmetricMatrix m(order);
    for (int i = 0; i < order; ++i)
        for (int j = i; j < order; ++j) m.set(i, j, scale * (2.0 * rng.uniform() - 1.0));
    return m;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    cliquelab::Rng rng(seed);
    rng.shuffle(perm);
    return perm;
}

inline cliquelab::Graph permuted(const cliquelab::Graph& g, const std::vector<int>& perm) {
    std::vector<cliquelab::Graph::Edge> edges;
    for (const auto& [u, v] : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return cliquelab::Graph::from_edges(g.vertex_count(), edges);
}

inline cliquelab::Graph complete_graph(int n) {
    std::vector<cliquelab::Graph::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return cliquelab::Graph::from_edges(n, edges);
}

inline cliquelab::Graph path_graph(int n) {
    std::vector<cliquelab::Graph::Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return cliquelab::Graph::from_edges(n, edges);
}

inline cliquelab::Graph cycle_graph(int n) {
    std::vector<cliquelab::Graph::Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return cliquelab::Graph::from_edges(n, edges);
}

inline cliquelab::Graph star_graph(int leaves) {  // K_{1,leaves}; center is vertex 0
    std::vector<cliquelab::Graph::Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return cliquelab::Graph::from_edges(leaves + 1, edges);
}

inline cliquelab::Graph petersen_graph() {
    std::vector<cliquelab::Graph::Edge> edges;
    for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer cycle
        edges.emplace_back(v, v + 5);                // spokes
        edges.emplace_back(v + 5, (v + 2) % 5 + 5);  // inner pentagram
    }
    return cliquelab::Graph::from_edges(10, edges);
}

}  // namespace testgen
