// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/upoly.hpp"

#include <vector>

namespace oredyn {

using QVector = std::vector<Rational>;
/// Row-major dense matrix over Q, rows of equal length.
using QMatrix = std::vector<QVector>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& a, std::size_t cols);

/// Basis of {x : a x = 0}, one vector per free column, in a canonical form
/// (each vector has a 1 in its free column and zeros in the other free columns).
std::vector<QVector> rational_kernel(const QMatrix& a, std::size_t cols);

/// Canonical basis (rref rows) of the span of the given vectors.
std::vector<QVector> span_basis(const std::vector<QVector>& vectors, std::size_t dim);

/// det(x I - a).
UPoly char_poly(const QMatrix& a);

}  // namespace oredyn
