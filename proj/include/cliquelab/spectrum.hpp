#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cliquelab/errors.hpp"
#include "cliquelab/graph.hpp"

namespace cliquelab {

/// All eigenvalues of a real symmetric matrix, ascending, with the tolerance
/// used to classify eigenvalues as zero.
struct Spectrum {
    std::vector<double> eigenvalues;  // ascending, with multiplicity
    double tolerance = 1e-8;

    double max_abs() const {
        double m = 0.0;
        for (double v : eigenvalues) m = std::max(m, std::abs(v));
        return m;
    }

    /// An eigenvalue counts as zero iff |v| <= tol * max(1, spectral radius).
    bool is_zero(double value) const {
        return std::abs(value) <= tolerance * std::max(1.0, max_abs());
    }

    double largest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
    double smallest() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }

    double second_largest() const {
        return eigenvalues.size() < 2 ? 0.0 : eigenvalues[eigenvalues.size() - 2];
    }

    double second_smallest() const {
        return eigenvalues.size() < 2 ? 0.0 : eigenvalues[1];
    }

    /// Ascending eigenvalues with the zero-classified ones removed.
    std::vector<double> nonzero() const {
        std::vector<double> kept;
        for (double v : eigenvalues)
            if (!is_zero(v)) kept.push_back(v);
        return kept;
    }

    double smallest_nonzero() const {
        const auto kept = nonzero();
        return kept.empty() ? 0.0 : kept.front();
    }

    double second_smallest_nonzero() const {
        const auto kept = nonzero();
        return kept.size() < 2 ? 0.0 : kept[1];
    }

    std::size_t zero_count() const {
        std::size_t count = 0;
        for (double v : eigenvalues)
            if (is_zero(v)) ++count;
        return count;
    }
};

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
/// O(order^3) per sweep; the corpus graphs stay small enough that this is
/// the whole eigeneffort.
inline Spectrum symmetric_eigenvalues(const SymmetricMatrix& matrix, double tol = 1e-8) {
    const int n = matrix.order();
    for (double v : matrix.data())
        if (!std::isfinite(v)) throw DataError("non-finite matrix entry");

    std::vector<double> a(matrix.data().begin(), matrix.data().end());
    const auto at = [&](int i, int j) -> double& {
        return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
    };

    double frobenius = 0.0;
    for (double v : a) frobenius += v * v;
    frobenius = std::sqrt(frobenius);
    const double stop = (frobenius > 0.0 ? frobenius : 1.0) * 1e-15;

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (std::sqrt(2.0 * off) <= stop) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = at(p, p);
                const double aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = akp - s * (akq + tau * akp);
                    at(p, k) = at(k, p);
                    at(k, q) = akq + s * (akp - tau * akq);
                    at(q, k) = at(k, q);
                }
            }
        }
    }

    Spectrum spectrum;
    spectrum.tolerance = tol;
    spectrum.eigenvalues.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) spectrum.eigenvalues.push_back(at(i, i));
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
    return spectrum;
}

}  // namespace cliquelab
