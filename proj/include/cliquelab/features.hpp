#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cliquelab/errors.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/spectrum.hpp"

namespace cliquelab {

constexpr std::size_t kFeatureCount = 23;

/// The 23 graph-level features, in canonical column order.
struct FeatureVector {
    double num_nodes = 0;
    double num_edges = 0;
    double density = 0;
    double radius = 0;
    double diameter = 0;
    double median_degree_centrality = 0;
    double median_betweenness_centrality = 0;
    double median_closeness_centrality = 0;
    double global_clustering_coefficient = 0;
    double median_eccentricity = 0;
    double algebraic_connectivity = 0;
    double median_neighbor_median_degree = 0;
    double spectral_radius = 0;
    double laplacian_spectral_radius = 0;
    double median_geodesic_distance = 0;
    double smallest_nonzero_laplacian_eig = 0;
    double second_smallest_nonzero_laplacian_eig = 0;
    double second_largest_laplacian_eig = 0;
    double smallest_nonzero_adjacency_eig = 0;
    double second_smallest_adjacency_eig = 0;
    double second_largest_adjacency_eig = 0;
    double adjacency_spectral_gap = 0;
    double laplacian_spectral_spread = 0;

    bool used_largest_component = false;

    static const std::array<std::string, kFeatureCount>& names() {
        static const std::array<std::string, kFeatureCount> kNames = {
            "num_nodes",
            "num_edges",
            "density",
            "radius",
            "diameter",
            "median_degree_centrality",
            "median_betweenness_centrality",
            "median_closeness_centrality",
            "global_clustering_coefficient",
            "median_eccentricity",
            "algebraic_connectivity",
            "median_neighbor_median_degree",
            "spectral_radius",
            "laplacian_spectral_radius",
            "median_geodesic_distance",
            "smallest_nonzero_laplacian_eig",
            "second_smallest_nonzero_laplacian_eig",
            "second_largest_laplacian_eig",
            "smallest_nonzero_adjacency_eig",
            "second_smallest_adjacency_eig",
            "second_largest_adjacency_eig",
            "adjacency_spectral_gap",
            "laplacian_spectral_spread",
        };
        return kNames;
    }

    std::array<double, kFeatureCount> values() const {
        return {num_nodes,
                num_edges,
                density,
                radius,
                diameter,
                median_degree_centrality,
                median_betweenness_centrality,
                median_closeness_centrality,
                global_clustering_coefficient,
                median_eccentricity,
                algebraic_connectivity,
                median_neighbor_median_degree,
                spectral_radius,
                laplacian_spectral_radius,
                median_geodesic_distance,
                smallest_nonzero_laplacian_eig,
                second_smallest_nonzero_laplacian_eig,
                second_largest_laplacian_eig,
                smallest_nonzero_adjacency_eig,
                second_smallest_adjacency_eig,
                second_largest_adjacency_eig,
                adjacency_spectral_gap,
                laplacian_spectral_spread};
    }
};

/// Median as the midpoint convention: mean of the two central order
/// statistics for even-length samples. Input need not be sorted.
inline double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

/// BFS distances from every source. Requires a connected graph.
inline std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
    if (!is_connected(g)) throw DataError("all-pairs distances need a connected graph");
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        queue.clear();
        queue.push_back(s);
        d[static_cast<std::size_t>(s)] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (d[static_cast<std::size_t>(v)] == -1) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

/// Normalized betweenness via Brandes' accumulation: pair-dependency sums
/// scaled by 2/((n-1)(n-2)). Graphs with n < 3 have no interior pairs and
/// return all zeros.
inline std::vector<double> betweenness_centralities(const Graph& g) {
    if (!is_connected(g)) throw DataError("betweenness needs a connected graph");
    const int n = g.vertex_count();
    std::vector<double> centrality(static_cast<std::size_t>(n), 0.0);
    if (n < 3) return centrality;

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> predecessors(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        order.clear();
        for (auto& preds : predecessors) preds.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(delta.begin(), delta.end(), 0.0);

        sigma[static_cast<std::size_t>(s)] = 1.0;
        dist[static_cast<std::size_t>(s)] = 0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const int u = order[head];
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] == -1) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    order.push_back(v);
                }
                if (dist[static_cast<std::size_t>(v)] == dist[static_cast<std::size_t>(u)] + 1) {
                    sigma[static_cast<std::size_t>(v)] += sigma[static_cast<std::size_t>(u)];
                    predecessors[static_cast<std::size_t>(v)].push_back(u);
                }
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            const int w = order[i];
            for (int u : predecessors[static_cast<std::size_t>(w)])
                delta[static_cast<std::size_t>(u)] += sigma[static_cast<std::size_t>(u)] /
                                                      sigma[static_cast<std::size_t>(w)] *
                                                      (1.0 + delta[static_cast<std::size_t>(w)]);
            if (w != s) centrality[static_cast<std::size_t>(w)] += delta[static_cast<std::size_t>(w)];
        }
    }
    // Each unordered pair was visited from both endpoints.
    const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
    for (double& c : centrality) c *= scale;
    return centrality;
}

namespace detail {

inline double transitivity(const Graph& g) {
    // closed_triples counts each triangle three times, once per corner.
    long long closed_triples = 0;
    long long triads = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        const long long d = static_cast<long long>(nbrs.size());
        triads += d * (d - 1) / 2;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++closed_triples;
    }
    if (triads == 0) return 0.0;
    return static_cast<double>(closed_triples) / static_cast<double>(triads);
}

inline double median_neighbor_median_degree(const Graph& g) {
    std::vector<double> per_vertex;
    per_vertex.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<double> neighbor_degrees;
        neighbor_degrees.reserve(g.neighbors(v).size());
        for (int u : g.neighbors(v)) neighbor_degrees.push_back(static_cast<double>(g.degree(u)));
        per_vertex.push_back(median(std::move(neighbor_degrees)));  // isolated vertex -> 0
    }
    return median(std::move(per_vertex));
}

}  // namespace detail

/// Computes all 23 features. Size, degree, clustering and neighbor-degree
/// features always describe the full graph; distance-based and spectral
/// features fall back to the largest connected component when the graph is
/// disconnected (flagged via used_largest_component).
inline FeatureVector extract_features(const Graph& g, double tol = 1e-8) {
    const int n = g.vertex_count();
    if (n == 0) throw DataError("cannot extract features of an empty graph");

    FeatureVector f;
    f.num_nodes = static_cast<double>(n);
    f.num_edges = static_cast<double>(g.edge_count());
    f.density = n >= 2 ? 2.0 * static_cast<double>(g.edge_count()) /
                             (static_cast<double>(n) * static_cast<double>(n - 1))
                       : 0.0;

    {
        std::vector<double> degree_centralities;
        degree_centralities.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            degree_centralities.push_back(n >= 2 ? static_cast<double>(g.degree(v)) /
                                                       static_cast<double>(n - 1)
                                                 : 0.0);
        f.median_degree_centrality = median(std::move(degree_centralities));
    }
    f.global_clustering_coefficient = detail::transitivity(g);
    f.median_neighbor_median_degree = detail::median_neighbor_median_degree(g);

    const bool connected = is_connected(g);
    const Graph component = connected ? g : largest_connected_component(g);
    f.used_largest_component = !connected;
    const int cn = component.vertex_count();

    if (cn >= 2) {
        const auto distances = all_pairs_distances(component);
        std::vector<double> eccentricities;
        std::vector<double> closeness;
        std::vector<double> pair_distances;
        eccentricities.reserve(static_cast<std::size_t>(cn));
        closeness.reserve(static_cast<std::size_t>(cn));
        for (int v = 0; v < cn; ++v) {
            int ecc = 0;
            long long total = 0;
            for (int u = 0; u < cn; ++u) {
                const int d = distances[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
                ecc = std::max(ecc, d);
                total += d;
                if (u > v) pair_distances.push_back(static_cast<double>(d));
            }
            eccentricities.push_back(static_cast<double>(ecc));
            closeness.push_back(static_cast<double>(cn - 1) / static_cast<double>(total));
        }
        f.radius = *std::min_element(eccentricities.begin(), eccentricities.end());
        f.diameter = *std::max_element(eccentricities.begin(), eccentricities.end());
        f.median_eccentricity = median(std::move(eccentricities));
        f.median_closeness_centrality = median(std::move(closeness));
        f.median_geodesic_distance = median(std::move(pair_distances));
        f.median_betweenness_centrality = median(betweenness_centralities(component));
    }

    const Spectrum adjacency = symmetric_eigenvalues(adjacency_matrix(component), tol);
    const Spectrum laplacian = symmetric_eigenvalues(laplacian_matrix(component), tol);

    f.spectral_radius = adjacency.largest();
    f.second_largest_adjacency_eig = adjacency.second_largest();
    f.second_smallest_adjacency_eig = adjacency.second_smallest();
    f.smallest_nonzero_adjacency_eig = adjacency.smallest_nonzero();
    f.adjacency_spectral_gap = f.spectral_radius - f.second_largest_adjacency_eig;

    f.laplacian_spectral_radius = laplacian.largest();
    f.algebraic_connectivity = cn >= 2 ? laplacian.second_smallest() : 0.0;
    f.smallest_nonzero_laplacian_eig = laplacian.smallest_nonzero();
    f.second_smallest_nonzero_laplacian_eig = laplacian.second_smallest_nonzero();
    f.second_largest_laplacian_eig = laplacian.second_largest();
    f.laplacian_spectral_spread = laplacian.largest() - laplacian.smallest();

    return f;
}

}  // namespace cliquelab
