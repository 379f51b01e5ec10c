#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gdim/common.hpp"
#include "gdim/graph.hpp"

namespace gdim {

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
// Converges when the off-diagonal Frobenius norm drops below 1e-10;
// sweep cap 10*n*n converts non-convergence into a loud failure.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };
    const long max_sweeps = 10L * n * n;
    for (long sweep = 0; sweep < max_sweeps && off_norm() >= 1e-10; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    if (off_norm() >= 1e-10) throw AnomalyError("jacobi rotation sweep cap exceeded");
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

inline std::vector<double> laplacian_matrix(const Graph& g) {
    int n = g.order();
    std::vector<double> l(static_cast<std::size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v) {
        l[static_cast<std::size_t>(v) * n + v] = g.degree(v);
        for (int w : g.neighbors(v)) l[static_cast<std::size_t>(v) * n + w] = -1.0;
    }
    return l;
}

// Largest Laplacian eigenvalue, accurate to 1e-8. Requires order >= 2.
inline double laplacian_max_eigenvalue(const Graph& g) {
    if (g.order() < 2) throw GraphError("laplacian_max_eigenvalue requires order >= 2");
    return jacobi_eigenvalues(laplacian_matrix(g), g.order()).back();
}

} // namespace gdim
