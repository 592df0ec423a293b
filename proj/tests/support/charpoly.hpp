#pragma once

// Independent eigenvalue oracle used by the tests: characteristic polynomial
// via Faddeev-LeVerrier, then real-root isolation through the derivative
// (roots of p' interlace the roots of p when all roots are real, which holds
// for symmetric matrices). Shares no code with the Jacobi solver.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cliquelab/graph.hpp"

namespace oracle {

// Monic characteristic polynomial p(x) = det(xI - A), coefficients indexed
// by power: result[k] multiplies x^k, result[n] == 1.
inline std::vector<double> characteristic_polynomial(const cliquelab::SymmetricMatrix& a) {
    const int n = a.order();
    const auto multiply = [&](const std::vector<double>& m) {
        std::vector<double> out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const double aik = a.at(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < n; ++j)
                    out[static_cast<std::size_t>(i) * n + j] +=
                        aik * m[static_cast<std::size_t>(k) * n + j];
            }
        return out;
    };
    const auto trace = [&](const std::vector<double>& m) {
        double t = 0.0;
        for (int i = 0; i < n; ++i) t += m[static_cast<std::size_t>(i) * n + i];
        return t;
    };

    // M_1 = A, c_k = tr(M_k)/k, M_{k+1} = A (M_k - c_k I);
    // p(x) = x^n - c_1 x^{n-1} - c_2 x^{n-2} - ... - c_n.
    std::vector<double> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs[static_cast<std::size_t>(n)] = 1.0;
    std::vector<double> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] = a.at(i, j);
    for (int k = 1; k <= n; ++k) {
        const double ck = trace(m) / static_cast<double>(k);
        coeffs[static_cast<std::size_t>(n - k)] = -ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] -= ck;
        m = multiply(m);
    }
    return coeffs;
}

inline double evaluate(const std::vector<double>& poly, double x) {
    double value = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) value = value * x + poly[i];
    return value;
}

inline double evaluate_magnitude(const std::vector<double>& poly, double x) {
    double value = 0.0;
    const double ax = std::abs(x);
    for (std::size_t i = poly.size(); i-- > 0;) value = value * ax + std::abs(poly[i]);
    return value;
}

inline std::vector<double> derivative(const std::vector<double>& poly) {
    std::vector<double> out;
    for (std::size_t i = 1; i < poly.size(); ++i) out.push_back(poly[i] * static_cast<double>(i));
    return out;
}

// All real roots (with multiplicity) of a monic polynomial whose roots are
// known to all be real.
inline std::vector<double> real_roots(const std::vector<double>& poly) {
    const std::size_t degree = poly.size() - 1;
    if (degree == 0) return {};
    if (degree == 1) return {-poly[0] / poly[1]};
    if (degree == 2) {
        const double a = poly[2], b = poly[1], c = poly[0];
        double disc = b * b - 4.0 * a * c;
        if (disc < 0.0) disc = 0.0;  // symmetric input: a negative value is roundoff
        const double s = std::sqrt(disc);
        std::vector<double> roots{(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)};
        std::sort(roots.begin(), roots.end());
        return roots;
    }

    const std::vector<double> critical = real_roots(derivative(poly));
    double bound = 0.0;
    for (std::size_t i = 0; i < degree; ++i) bound = std::max(bound, std::abs(poly[i]));
    bound = bound / std::abs(poly[degree]) + 1.0;

    std::vector<double> points{-bound};
    points.insert(points.end(), critical.begin(), critical.end());
    points.push_back(bound);
    std::sort(points.begin(), points.end());

    const auto nearly_zero = [&](double x) {
        return std::abs(evaluate(poly, x)) <= 1e-11 * std::max(1.0, evaluate_magnitude(poly, x));
    };

    std::vector<double> roots;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        double lo = points[i], hi = points[i + 1];
        const double flo = evaluate(poly, lo), fhi = evaluate(poly, hi);
        if (flo == 0.0 || fhi == 0.0) continue;  // handled as critical-point roots below
        if ((flo < 0.0) == (fhi < 0.0)) continue;
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            const double fmid = evaluate(poly, mid);
            if (fmid == 0.0) {
                lo = hi = mid;
                break;
            }
            if ((fmid < 0.0) == (flo < 0.0))
                lo = mid;
            else
                hi = mid;
        }
        roots.push_back(0.5 * (lo + hi));
    }
    // Multiple roots sit at critical points where p itself vanishes.
    for (double c : critical)
        if (nearly_zero(c))
            while (roots.size() < degree &&
                   std::count_if(roots.begin(), roots.end(),
                                 [&](double r) { return std::abs(r - c) < 1e-9; }) < 2)
                roots.push_back(c);
    // Endpoint roots of the sign-change scan (p(point) == 0 exactly).
    for (double p : points)
        if (roots.size() < degree && evaluate(poly, p) == 0.0) roots.push_back(p);

    std::sort(roots.begin(), roots.end());
    return roots;
}

inline std::vector<double> eigenvalues_by_charpoly(const cliquelab::SymmetricMatrix& a) {
    return real_roots(characteristic_polynomial(a));
}

}  // namespace oracle
