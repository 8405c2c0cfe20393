// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/polygon.hpp"

#include <algorithm>

namespace oredyn {

namespace {

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew's monotone chain; drops collinear points, returns CCW order.
std::vector<LatticePoint> monotone_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 1) return pts;
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

// Removes consecutive duplicates and collinear middle vertices (cyclically).
std::vector<LatticePoint> strip_collinear(std::vector<LatticePoint> v) {
    v.erase(std::unique(v.begin(), v.end()), v.end());
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();
    bool changed = true;
    while (changed && v.size() > 2) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[(i + v.size() - 1) % v.size()];
            const auto& b = v[i];
            const auto& c = v[(i + 1) % v.size()];
            // Collinear and b strictly between a and c.
            if (cross(a, b, c) == 0 && (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y) > 0) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return v;
}

}  // namespace

LatticePolygon LatticePolygon::hull_of(std::vector<LatticePoint> points) {
    LatticePolygon p;
    p.v_ = monotone_hull(std::move(points));
    return p;
}

LatticePolygon LatticePolygon::from_vertices(const std::vector<LatticePoint>& vertices) {
    if (vertices.empty()) throw InputError("polygon needs at least one vertex");
    LatticePolygon hull = hull_of(vertices);
    if (hull.v_.size() <= 2) {
        // Point or segment: all input points must be collinear.
        for (std::size_t i = 2; i < vertices.size(); ++i)
            if (cross(vertices[0], vertices[1], vertices[i]) != 0) throw InputError("polygon is not convex");
        return hull;
    }
    // Convex iff the reduced input cycle equals the hull cycle (either orientation).
    std::vector<LatticePoint> cyc = strip_collinear(vertices);
    if (cyc.size() != hull.v_.size()) throw InputError("polygon is not convex");
    for (int dir : {1, -1}) {
        auto it = std::find(cyc.begin(), cyc.end(), hull.v_[0]);
        if (it == cyc.end()) break;
        std::size_t start = static_cast<std::size_t>(it - cyc.begin());
        const std::size_t n = cyc.size();
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k) {
            std::size_t idx = dir > 0 ? (start + k) % n : (start + n - k) % n;
            ok = cyc[idx] == hull.v_[k];
        }
        if (ok) return hull;
    }
    throw InputError("polygon is not convex");
}

LatticePolygon LatticePolygon::transformed(const IntegerMatrix& m) const {
    std::vector<LatticePoint> pts;
    for (const auto& p : v_) pts.push_back({m(0, 0) * p.x + m(0, 1) * p.y, m(1, 0) * p.x + m(1, 1) * p.y});
    return hull_of(std::move(pts));
}

LatticePolygon minkowski_sum(const LatticePolygon& a, const LatticePolygon& b) {
    std::vector<LatticePoint> pts;
    pts.reserve(a.v_.size() * b.v_.size());
    for (const auto& p : a.v_)
        for (const auto& q : b.v_) pts.push_back({p.x + q.x, p.y + q.y});
    return LatticePolygon::hull_of(std::move(pts));
}

Integer LatticePolygon::double_area() const {
    Integer s = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const auto& p = v_[i];
        const auto& q = v_[(i + 1) % v_.size()];
        s += p.x * q.y - q.x * p.y;
    }
    return abs(s);
}

Integer LatticePolygon::boundary_points() const {
    if (v_.size() == 1) return 1;
    Integer b = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const auto& p = v_[i];
        const auto& q = v_[(i + 1) % v_.size()];
        Integer dx = abs(q.x - p.x), dy = abs(q.y - p.y), g;
        mpz_gcd(g.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
        b += g;
    }
    // A segment is traversed twice.
    if (v_.size() == 2) b = b / 2 + 1;
    return b;
}

Integer lattice_point_count(const LatticePolygon& p) {
    const auto& v = p.vertices();
    if (v.empty()) return 0;
    Integer ymin = v[0].y, ymax = v[0].y;
    for (const auto& q : v) {
        ymin = std::min(ymin, q.y);
        ymax = std::max(ymax, q.y);
    }
    Integer total = 0;
    for (Integer y = ymin; y <= ymax; ++y) {
        bool any = false;
        Rational lo, hi;
        auto take = [&](const Rational& x) {
            if (!any) {
                lo = hi = x;
                any = true;
            } else {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        };
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& a = v[i];
            const auto& b = v[(i + 1) % v.size()];
            if (a.y == y) take(Rational(a.x));
            if (b.y == y) take(Rational(b.x));
            if ((a.y < y && y < b.y) || (b.y < y && y < a.y))
                take(Rational(a.x) + Rational(b.x - a.x) * Rational(y - a.y) / Rational(b.y - a.y));
        }
        if (any) {
            Integer c = floor(hi) - ceil(lo) + 1;
            if (c > 0) total += c;
        }
    }
    return total;
}

Integer lattice_point_count(const std::vector<LatticePoint>& vertices) {
    return lattice_point_count(LatticePolygon::from_vertices(vertices));
}

}  // namespace oredyn
