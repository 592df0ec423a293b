#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cliquelab/errors.hpp"
#include "cliquelab/features.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/rng.hpp"

namespace cliquelab {

struct CliqueResult {
    std::vector<int> vertices;  // sorted ascending
    int size = 0;
    bool proven_optimal = false;
    double elapsed_seconds = 0.0;
    std::string solver_name;
    bool timed_out = false;
    std::uint64_t work = 0;  // deterministic effort counter (search nodes / moves)
};

inline bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

/// Every solver funnels its result through this check before returning it.
inline void ensure_valid_result(const Graph& g, const CliqueResult& result) {
    if (static_cast<int>(result.vertices.size()) != result.size)
        throw InvariantError(result.solver_name + ": size disagrees with vertex set");
    if (!is_clique(g, result.vertices))
        throw InvariantError(result.solver_name + ": returned vertex set is not a clique");
    if (result.proven_optimal && result.timed_out)
        throw InvariantError(result.solver_name + ": proven optimal yet timed out");
}

namespace detail {

// Fixed-size bitset over vertex ids; one row per vertex gives O(n/64) set ops.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int n) : bits_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void insert(int v) { bits_[static_cast<std::size_t>(v) >> 6] |= 1ULL << (v & 63); }
    void erase(int v) { bits_[static_cast<std::size_t>(v) >> 6] &= ~(1ULL << (v & 63)); }
    bool contains(int v) const { return bits_[static_cast<std::size_t>(v) >> 6] >> (v & 63) & 1; }

    bool empty() const {
        for (std::uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    int count() const {
        int total = 0;
        for (std::uint64_t w : bits_) total += std::popcount(w);
        return total;
    }

    int first() const {
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) return static_cast<int>(i * 64) + std::countr_zero(bits_[i]);
        return -1;
    }

    VertexSet& intersect(const VertexSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= other.bits_[i];
        return *this;
    }

    VertexSet& subtract(const VertexSet& other) {
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= ~other.bits_[i];
        return *this;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < bits_.size(); ++i) {
            std::uint64_t w = bits_[i];
            while (w) {
                fn(static_cast<int>(i * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> bits_;
};

inline std::vector<VertexSet> adjacency_sets(const Graph& g) {
    std::vector<VertexSet> adj(static_cast<std::size_t>(g.vertex_count()),
                               VertexSet(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v)) adj[static_cast<std::size_t>(v)].insert(u);
    return adj;
}

}  // namespace detail

/// Exhaustive clique enumeration; test oracle for the real solvers.
inline int brute_force_omega(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 22) throw DataError("brute-force clique oracle is limited to 22 vertices");
    if (n == 0) return 0;
    const auto adj = detail::adjacency_sets(g);
    int best = 0;
    // Recursion over (next candidate, candidate set); visits every clique once.
    auto recurse = [&](auto&& self, const detail::VertexSet& candidates, int depth) -> void {
        best = std::max(best, depth);
        candidates.for_each([&](int v) {
            detail::VertexSet next = candidates;
            next.intersect(adj[static_cast<std::size_t>(v)]);
            // Keep only vertices after v so each clique is enumerated once.
            for (int u = 0; u <= v; ++u) next.erase(u);
            self(self, next, depth + 1);
        });
    };
    detail::VertexSet all(n);
    for (int v = 0; v < n; ++v) all.insert(v);
    recurse(recurse, all, 0);
    return best;
}

/// Deterministic greedy construction: repeatedly add the vertex with the
/// highest degree inside the shrinking candidate set (ties toward the
/// smallest id).
inline CliqueResult solve_greedy(const Graph& g) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (n == 0) throw DataError("empty graph");
    const auto adj = detail::adjacency_sets(g);

    CliqueResult result;
    result.solver_name = "greedy";
    detail::VertexSet candidates(n);
    for (int v = 0; v < n; ++v) candidates.insert(v);
    while (!candidates.empty()) {
        int best_vertex = -1;
        int best_degree = -1;
        candidates.for_each([&](int v) {
            ++result.work;
            detail::VertexSet within = candidates;
            within.intersect(adj[static_cast<std::size_t>(v)]);
            const int d = within.count();
            if (d > best_degree) {
                best_degree = d;
                best_vertex = v;
            }
        });
        result.vertices.push_back(best_vertex);
        candidates.intersect(adj[static_cast<std::size_t>(best_vertex)]);
    }
    std::sort(result.vertices.begin(), result.vertices.end());
    result.size = static_cast<int>(result.vertices.size());
    result.proven_optimal = false;
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ensure_valid_result(g, result);
    return result;
}

/// Branch and bound with greedy-coloring upper bounds. Returns the maximum
/// clique with proven_optimal when the search finishes inside the time
/// limit, otherwise the best incumbent with timed_out set.
inline CliqueResult solve_exact_bnb(const Graph& g, double time_limit_seconds = 60.0) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (n == 0) throw DataError("empty graph");
    const auto adj = detail::adjacency_sets(g);

    CliqueResult result;
    result.solver_name = "exact_bnb";

    // Greedy incumbent gives the initial lower bound.
    std::vector<int> best = solve_greedy(g).vertices;

    const auto deadline =
        start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(time_limit_seconds));
    bool timed_out = false;
    std::uint64_t nodes = 0;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(n));

    struct Colored {
        int vertex;
        int bound;
    };

    auto expand = [&](auto&& self, const detail::VertexSet& candidates) -> void {
        if (timed_out) return;
        if (((++nodes) & 0x3ff) == 0 && std::chrono::steady_clock::now() >= deadline) {
            timed_out = true;
            return;
        }
        // Greedy coloring: vertices of color class k can pairwise conflict
        // with at most one clique vertex each, so |current| + color bounds
        // any clique through this node.
        std::vector<Colored> ordered;
        detail::VertexSet uncolored = candidates;
        int color = 0;
        while (!uncolored.empty()) {
            ++color;
            detail::VertexSet admissible = uncolored;
            while (!admissible.empty()) {
                const int v = admissible.first();
                admissible.erase(v);
                admissible.subtract(adj[static_cast<std::size_t>(v)]);
                uncolored.erase(v);
                ordered.push_back({v, color});
            }
        }
        detail::VertexSet remaining = candidates;
        for (std::size_t i = ordered.size(); i-- > 0;) {
            if (timed_out) return;
            const auto [v, bound] = ordered[i];
            if (static_cast<int>(current.size()) + bound <= static_cast<int>(best.size())) return;
            current.push_back(v);
            if (current.size() > best.size()) best = current;
            detail::VertexSet next = remaining;
            next.intersect(adj[static_cast<std::size_t>(v)]);
            if (!next.empty()) self(self, next);
            current.pop_back();
            remaining.erase(v);
        }
    };

    detail::VertexSet all(n);
    for (int v = 0; v < n; ++v) all.insert(v);
    expand(expand, all);

    result.vertices = std::move(best);
    std::sort(result.vertices.begin(), result.vertices.end());
    result.size = static_cast<int>(result.vertices.size());
    result.timed_out = timed_out;
    result.proven_optimal = !timed_out;
    result.work = nodes;
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ensure_valid_result(g, result);
    return result;
}

/// Multi-restart local search: random greedy construction followed by
/// (1,2)-swap improvement. Deterministic for a fixed seed.
inline CliqueResult solve_local_search(const Graph& g, int iterations, std::uint64_t seed) {
    const auto start = std::chrono::steady_clock::now();
    const int n = g.vertex_count();
    if (n == 0) throw DataError("empty graph");
    if (iterations < 1) throw DataError("local search needs at least one iteration");
    const auto adj = detail::adjacency_sets(g);
    Rng rng(seed);

    CliqueResult result;
    result.solver_name = "local_search";
    std::vector<int> best;

    for (int restart = 0; restart < iterations; ++restart) {
        // Random greedy construction.
        std::vector<int> clique;
        detail::VertexSet candidates(n);
        for (int v = 0; v < n; ++v) candidates.insert(v);
        while (!candidates.empty()) {
            std::vector<int> options;
            candidates.for_each([&](int v) { options.push_back(v); });
            const int chosen = options[static_cast<std::size_t>(rng.below(options.size()))];
            clique.push_back(chosen);
            candidates.intersect(adj[static_cast<std::size_t>(chosen)]);
            ++result.work;
        }

        // (1,2)-swap improvement until a fixed point: drop one clique vertex
        // when two mutually adjacent outside vertices can replace it.
        bool improved = true;
        while (improved) {
            improved = false;
            // First grow greedily if anything fits as-is.
            detail::VertexSet common(n);
            for (int v = 0; v < n; ++v) common.insert(v);
            for (int c : clique) {
                common.intersect(adj[static_cast<std::size_t>(c)]);
                common.erase(c);
            }
            if (!common.empty()) {
                clique.push_back(common.first());
                improved = true;
                ++result.work;
                continue;
            }
            for (std::size_t drop = 0; drop < clique.size() && !improved; ++drop) {
                detail::VertexSet open(n);
                for (int v = 0; v < n; ++v) open.insert(v);
                for (std::size_t i = 0; i < clique.size(); ++i) {
                    if (i == drop) continue;
                    open.intersect(adj[static_cast<std::size_t>(clique[i])]);
                }
                for (int c : clique) open.erase(c);
                std::vector<int> options;
                open.for_each([&](int v) { options.push_back(v); });
                for (std::size_t a = 0; a < options.size() && !improved; ++a) {
                    for (std::size_t b = a + 1; b < options.size() && !improved; ++b) {
                        ++result.work;
                        if (g.has_edge(options[a], options[b])) {
                            clique.erase(clique.begin() + static_cast<std::ptrdiff_t>(drop));
                            clique.push_back(options[a]);
                            clique.push_back(options[b]);
                            improved = true;
                        }
                    }
                }
            }
        }
        if (clique.size() > best.size()) best = clique;
    }

    result.vertices = std::move(best);
    std::sort(result.vertices.begin(), result.vertices.end());
    result.size = static_cast<int>(result.vertices.size());
    result.proven_optimal = false;
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ensure_valid_result(g, result);
    return result;
}

struct HardnessLabel {
    bool hard = false;
    int reference_size = 0;
    std::vector<int> alternate_sizes;
};

inline const char* hardness_name(bool hard) { return hard ? "hard" : "not_hard"; }

/// Hard iff no alternate reached the proven-optimal reference size. Binary
/// and absolute; the size gap is ignored.
inline HardnessLabel label_hardness(const CliqueResult& reference,
                                    const std::vector<CliqueResult>& alternates) {
    if (!reference.proven_optimal)
        throw DataError("hardness labeling needs a proven-optimal reference result");
    if (alternates.empty()) throw DataError("hardness labeling needs at least one alternate");
    HardnessLabel label;
    label.reference_size = reference.size;
    label.hard = true;
    for (const auto& alt : alternates) {
        if (alt.size > reference.size)
            throw InvariantError(alt.solver_name + " exceeded the proven optimum (" +
                                 std::to_string(alt.size) + " > " +
                                 std::to_string(reference.size) + ")");
        label.alternate_sizes.push_back(alt.size);
        if (alt.size == reference.size) label.hard = false;
    }
    return label;
}

struct PortfolioConfig {
    double time_limit_seconds = 60.0;
    int local_search_iterations = 64;
    std::uint64_t seed = 1;
    int timing_repeats = 6;
    // Replaces wall-clock timings with a fixed multiple of each solver's
    // work counter, making label outputs bit-reproducible.
    bool deterministic_timing = false;
    double feature_tolerance = 1e-8;
};

struct InstanceRecord {
    std::string id;
    FeatureVector features;
    std::vector<CliqueResult> results;      // exact first, then alternates
    std::optional<HardnessLabel> label;     // empty when the exact solver timed out
};

namespace detail {

template <typename SolverFn>
CliqueResult timed_run(SolverFn&& solver, const PortfolioConfig& config) {
    CliqueResult result = solver();
    if (config.deterministic_timing) {
        result.elapsed_seconds = static_cast<double>(result.work) * 1e-7;
        return result;
    }
    std::vector<double> samples{result.elapsed_seconds};
    for (int repeat = 1; repeat < config.timing_repeats; ++repeat)
        samples.push_back(solver().elapsed_seconds);
    result.elapsed_seconds = median(std::move(samples));
    return result;
}

}  // namespace detail

/// Runs the exact reference plus both alternates, records median-of-repeats
/// runtimes, and attaches features and the hardness label. A reference
/// timeout leaves the record unlabeled (excluded from learning datasets).
inline InstanceRecord run_portfolio(const Graph& g, const PortfolioConfig& config,
                                    std::string id = {}) {
    InstanceRecord record;
    record.id = std::move(id);
    record.features = extract_features(g, config.feature_tolerance);

    CliqueResult exact = detail::timed_run(
        [&] { return solve_exact_bnb(g, config.time_limit_seconds); }, config);
    CliqueResult greedy = detail::timed_run([&] { return solve_greedy(g); }, config);
    CliqueResult local = detail::timed_run(
        [&] { return solve_local_search(g, config.local_search_iterations, config.seed); }, config);

    record.results.push_back(std::move(exact));
    record.results.push_back(std::move(greedy));
    record.results.push_back(std::move(local));

    if (!record.results.front().timed_out)
        record.label = label_hardness(record.results.front(),
                                      {record.results[1], record.results[2]});
    return record;
}

}  // namespace cliquelab
