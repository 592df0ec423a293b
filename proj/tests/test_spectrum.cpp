#include <cmath>

#include "catch_amalgamated.hpp"
#include "cliquelab/graph.hpp"
#include "cliquelab/spectrum.hpp"
#include "support/charpoly.hpp"
#include "support/generators.hpp"

using cliquelab::symmetric_eigenvalues;

TEST_CASE("charpoly oracle sanity: K3 adjacency") {
    const auto a = cliquelab::adjacency_matrix(testgen::complete_graph(3));
    const auto poly = oracle::characteristic_polynomial(a);
    // det(xI - A) = x^3 - 3x - 2
    REQUIRE(poly.size() == 4);
    CHECK_THAT(poly[3], Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(poly[2], Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(poly[1], Catch::Matchers::WithinAbs(-3.0, 1e-12));
    CHECK_THAT(poly[0], Catch::Matchers::WithinAbs(-2.0, 1e-12));
    const auto roots = oracle::real_roots(poly);
    REQUIRE(roots.size() == 3);
    CHECK_THAT(roots[0], Catch::Matchers::WithinAbs(-1.0, 1e-9));
    CHECK_THAT(roots[1], Catch::Matchers::WithinAbs(-1.0, 1e-9));
    CHECK_THAT(roots[2], Catch::Matchers::WithinAbs(2.0, 1e-9));
}

TEST_CASE("K3 adjacency spectrum is {-1, -1, 2}") {
    const auto s = symmetric_eigenvalues(cliquelab::adjacency_matrix(testgen::complete_graph(3)));
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK_THAT(s.eigenvalues[0], Catch::Matchers::WithinAbs(-1.0, 1e-12));
    CHECK_THAT(s.eigenvalues[1], Catch::Matchers::WithinAbs(-1.0, 1e-12));
    CHECK_THAT(s.eigenvalues[2], Catch::Matchers::WithinAbs(2.0, 1e-12));
}

TEST_CASE("P3 Laplacian spectrum is {0, 1, 3}") {
    const auto s = symmetric_eigenvalues(cliquelab::laplacian_matrix(testgen::path_graph(3)));
    REQUIRE(s.eigenvalues.size() == 3);
    CHECK_THAT(s.eigenvalues[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(s.eigenvalues[1], Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK_THAT(s.eigenvalues[2], Catch::Matchers::WithinAbs(3.0, 1e-12));
}

TEST_CASE("path Laplacian matches the analytic 2 - 2cos(k pi / n) values") {
    const int n = 7;
    const auto s = symmetric_eigenvalues(cliquelab::laplacian_matrix(testgen::path_graph(n)));
    std::vector<double> expected;
    for (int k = 0; k < n; ++k) expected.push_back(2.0 - 2.0 * std::cos(k * M_PI / n));
    std::sort(expected.begin(), expected.end());
    for (int i = 0; i < n; ++i)
        CHECK_THAT(s.eigenvalues[static_cast<std::size_t>(i)],
                   Catch::Matchers::WithinAbs(expected[static_cast<std::size_t>(i)], 1e-10));
}

TEST_CASE("random symmetric matrices match the charpoly oracle") {
    // The module-level example: a fixed-seed 4x4; the acceptance suite sweeps
    // 100 matrices up to order 6.
    const auto m = testgen::random_symmetric(4, 20240, 1.0);
    const auto expected = oracle::eigenvalues_by_charpoly(m);
    const auto s = symmetric_eigenvalues(m);
    REQUIRE(expected.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK_THAT(s.eigenvalues[i], Catch::Matchers::WithinAbs(expected[i], 1e-8));
}

TEST_CASE("non-finite entries are rejected") {
    cliquelab::SymmetricMatrix m(2);
    m.set(0, 1, std::nan(""));
    CHECK_THROWS_AS(symmetric_eigenvalues(m), cliquelab::DataError);
}

TEST_CASE("zero classification uses the relative tolerance") {
    cliquelab::SymmetricMatrix m(2);
    m.set(0, 0, 1000.0);
    m.set(1, 1, 1e-6);
    const auto s = symmetric_eigenvalues(m, 1e-8);
    CHECK(s.is_zero(1e-6));   // 1e-6 <= 1e-8 * 1000
    CHECK_FALSE(s.is_zero(2e-5));
    CHECK(s.smallest_nonzero() == 1000.0);
}

TEST_CASE("spectrum helpers on a 1x1 matrix fall back to zero") {
    cliquelab::SymmetricMatrix m(1);
    const auto s = symmetric_eigenvalues(m);
    CHECK(s.second_largest() == 0.0);
    CHECK(s.second_smallest() == 0.0);
    CHECK(s.smallest_nonzero() == 0.0);
    CHECK(s.second_smallest_nonzero() == 0.0);
}

TEST_CASE("spectrum sums match trace identities on random graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto g = testgen::gnp(14, 0.35, seed);
        const auto adjacency = symmetric_eigenvalues(cliquelab::adjacency_matrix(g));
        const auto laplacian = symmetric_eigenvalues(cliquelab::laplacian_matrix(g));
        double adjacency_sum = 0.0, laplacian_sum = 0.0;
        for (double v : adjacency.eigenvalues) adjacency_sum += v;
        for (double v : laplacian.eigenvalues) laplacian_sum += v;
        CHECK_THAT(adjacency_sum, Catch::Matchers::WithinAbs(0.0, 1e-9));
        CHECK_THAT(laplacian_sum,
                   Catch::Matchers::WithinAbs(2.0 * static_cast<double>(g.edge_count()), 1e-9));
    }
}

TEST_CASE("Laplacian zero eigenvalues count the connected components") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto g = testgen::gnp(12, 0.12, seed);
        int components = 0;
        cliquelab::connected_components(g, &components);
        const auto s = symmetric_eigenvalues(cliquelab::laplacian_matrix(g));
        CHECK(static_cast<int>(s.zero_count()) == components);
    }
}
