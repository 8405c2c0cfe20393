// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/int_matrix.hpp"

#include <vector>

namespace oredyn {

struct LatticePoint {
    Integer x, y;
    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

/// Convex lattice polygon held as its hull vertices in counterclockwise order
/// (no collinear vertices). Points and segments are allowed.
class LatticePolygon {
public:
    LatticePolygon() = default;
    /// Accepts the vertices of a convex polygon in either orientation;
    /// collinear repeats are tolerated, non-convex input throws InputError.
    static LatticePolygon from_vertices(const std::vector<LatticePoint>& vertices);
    /// Convex hull of an arbitrary point set.
    static LatticePolygon hull_of(std::vector<LatticePoint> points);

    const std::vector<LatticePoint>& vertices() const { return v_; }
    LatticePolygon transformed(const IntegerMatrix& m) const;
    friend LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b);
    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b) { return a.v_ == b.v_; }

    /// Twice the area.
    Integer double_area() const;
    /// Lattice points on the boundary.
    Integer boundary_points() const;

private:
    std::vector<LatticePoint> v_;
};

/// Exact count of integer points in the closed polygon (row scan).
Integer lattice_point_count(const LatticePolygon& p);
Integer lattice_point_count(const std::vector<LatticePoint>& vertices);

}  // namespace oredyn
