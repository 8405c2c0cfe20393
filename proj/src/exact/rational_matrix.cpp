// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/rational_matrix.hpp"

namespace oredyn {

std::vector<std::size_t> rref(QMatrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    a.resize(r);
    return pivots;
}

std::vector<QVector> rational_kernel(const QMatrix& a, std::size_t cols) {
    QMatrix m = a;
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim) {
    QMatrix m = vectors;
    rref(m, dim);
    return m;
}

UPoly char_poly(const QMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? UPoly::x() : UPoly()) - UPoly(a[i][j]);
    return determinant(std::move(m));
}

}  // namespace oredyn
