// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

// Independent brute-force checks used by the unit and acceptance tests.
// Nothing here calls the engine's algorithms for the quantity being checked.

#pragma once

#include "exact/int_matrix.hpp"
#include "exact/polygon.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oredyn::oracle {


/// Every 2x2 integer matrix with entries in [lo, hi] and determinant +-1.
inline std::vector<IntegerMatrix> gl2_corpus(long lo = -2, long hi = 2) {
    std::vector<IntegerMatrix> out;
    for (long a = lo; a <= hi; ++a)
        for (long b = lo; b <= hi; ++b)
            for (long c = lo; c <= hi; ++c)
                for (long d = lo; d <= hi; ++d) {
                    long det = a * d - b * c;
                    if (det == 1 || det == -1) out.push_back(IntegerMatrix{{a, b}, {c, d}});
                }
    return out;
}

inline long to_long(const Integer& z) { return z.get_si(); }

/// Eigenvalues of a 2x2 integer matrix in floating point.
inline std::array<std::complex<double>, 2> eigenvalues2(const IntegerMatrix& m) {
    double tr = m(0, 0).get_d() + m(1, 1).get_d();
    double det = m(0, 0).get_d() * m(1, 1).get_d() - m(0, 1).get_d() * m(1, 0).get_d();
    std::complex<double> disc = std::sqrt(std::complex<double>(tr * tr - 4 * det));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

/// Root of unity test by checking M^k = I or (M^k - I) nilpotent by direct
/// powering for k up to 12.
inline bool quasi_unipotent_by_powering(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    IntegerMatrix p = IntegerMatrix::identity(n);
    for (int k = 1; k <= 12; ++k) {
        p = p * m;
        IntegerMatrix d = p - IntegerMatrix::identity(n);
        IntegerMatrix q = d;
        for (std::size_t r = 1; r <= n; ++r) {
            if (q.is_zero()) return true;
            q = q * d;
        }
        if (q.is_zero()) return true;
    }
    return false;
}

/// Whether a nonzero integer vector a with M a = a exists, found by
/// enumerating the box [-B, B]^2.
inline bool has_fixed_vector_in_box(const IntegerMatrix& m, long bound) {
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            if (x == 0 && y == 0) continue;
            IntVector v{x, y};
            if (m * v == v) return true;
        }
    return false;
}

/// Points of the closed convex polygon, counted by testing every point of the
/// bounding box against all edge half-planes.
inline long brute_force_lattice_count(const std::vector<std::pair<long, long>>& hull_ccw) {
    long xmin = hull_ccw[0].first, xmax = xmin, ymin = hull_ccw[0].second, ymax = ymin;
    for (auto [x, y] : hull_ccw) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    const std::size_t n = hull_ccw.size();
    long count = 0;
    for (long x = xmin; x <= xmax; ++x)
        for (long y = ymin; y <= ymax; ++y) {
            bool inside = true;
            if (n >= 3) {
                for (std::size_t i = 0; i < n && inside; ++i) {
                    auto [ax, ay] = hull_ccw[i];
                    auto [bx, by] = hull_ccw[(i + 1) % n];
                    inside = (bx - ax) * (y - ay) - (by - ay) * (x - ax) >= 0;
                }
            } else if (n == 2) {
                auto [ax, ay] = hull_ccw[0];
                auto [bx, by] = hull_ccw[1];
                inside = (bx - ax) * (y - ay) - (by - ay) * (x - ax) == 0;
            }
            count += inside;
        }
    return count;
}

/// Brute-force lattice count of a polygon handed over as engine vertices.
inline long brute_force_lattice_count(const LatticePolygon& p) {
    std::vector<std::pair<long, long>> v;
    for (const auto& q : p.vertices()) v.emplace_back(q.x.get_si(), q.y.get_si());
    return brute_force_lattice_count(v);
}

/// Random convex lattice polygon: hull of random points in [-r, r]^2.
inline std::vector<LatticePoint> random_point_cloud(std::mt19937_64& rng, long r, int count) {
    std::uniform_int_distribution<long> d(-r, r);
    std::vector<LatticePoint> pts;
    for (int i = 0; i < count; ++i) pts.push_back({d(rng), d(rng)});
    return pts;
}

// Number of e in (Z/d)^2 with (M^n)^T e = e mod d, by direct residue arithmetic.
inline long brute_torsion_count(const IntegerMatrix& m, std::int64_t n, long d) {
    IntegerMatrix p = matrix_power(m, n);
    long count = 0;
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y) {
            long a = to_long(p(0, 0)) * x + to_long(p(1, 0)) * y - x;
            long b = to_long(p(0, 1)) * x + to_long(p(1, 1)) * y - y;
            if (((a % d) + d) % d == 0 && ((b % d) + d) % d == 0) ++count;
        }
    return count;
}

inline double inf_norm(const IntegerMatrix& m) {
    double best = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j).get_d());
        best = std::max(best, s);
    }
    return best;
}

}  // namespace oredyn::oracle
