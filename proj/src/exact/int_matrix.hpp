// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "exact/rational.hpp"
#include "exact/upoly.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace oredyn {

using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers (row-major). Square unless
/// noted; rectangular shapes are accepted where an operation says so.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    IntVector column(std::size_t c) const;
    IntVector row(std::size_t r) const;
    IntegerMatrix transpose() const;
    bool is_zero() const;

    friend IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y);
    friend IntVector operator*(const IntegerMatrix& x, const IntVector& v);
    friend IntegerMatrix operator+(const IntegerMatrix& x, const IntegerMatrix& y);
    friend IntegerMatrix operator-(const IntegerMatrix& x, const IntegerMatrix& y);
    friend bool operator==(const IntegerMatrix& x, const IntegerMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

Integer determinant(const IntegerMatrix& m);
/// Inverse of a unimodular matrix; throws InputError when |det| != 1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);
/// m^e for e >= 0, or the inverse power for unimodular m when e < 0.
IntegerMatrix matrix_power(const IntegerMatrix& m, std::int64_t e);

/// det(x I - m), monic of degree n, integer coefficients.
UPoly char_poly(const IntegerMatrix& m);
/// Evaluates a polynomial with integer coefficients at a square matrix.
IntegerMatrix eval_at_matrix(const UPoly& p, const IntegerMatrix& m);

/// Smallest r >= 1 with m^r = 0, or 0 when m is not nilpotent.
int nilpotency_index(const IntegerMatrix& m);
std::size_t rank(const IntegerMatrix& m);

/// Z-basis of {a : m a = 0}. The basis spans a saturated sublattice and is in
/// a canonical echelon form (deterministic).
std::vector<IntVector> integer_kernel(const IntegerMatrix& m);

/// Hermite-reduced row basis of the lattice spanned by the given vectors.
std::vector<IntVector> lattice_echelon(std::vector<IntVector> vectors);

/// Diagonal of the Smith normal form (length min(rows, cols); zeros kept).
std::vector<Integer> smith_diagonal(const IntegerMatrix& m);

/// Unimodular matrix whose first row is the primitive vector a.
IntegerMatrix unimodular_completion(const IntVector& a);

Integer content(const IntVector& v);
IntVector make_primitive(IntVector v);
/// Flips sign so the first nonzero entry is positive.
IntVector normalize_sign(IntVector v);
std::string to_string(const IntVector& v);

}  // namespace oredyn
