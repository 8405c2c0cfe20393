// Copyright (C) 2026 The oredyn Authors
// SPDX-License-Identifier: Apache-2.0

#include "exact/int_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oredyn {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) a_.emplace_back(v);
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows) {
    IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols_) throw InputError("ragged matrix");
        for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntegerMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntegerMatrix::row(std::size_t r) const {
    return IntVector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntegerMatrix IntegerMatrix::transpose() const {
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntegerMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Integer& z) { return z == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& x, const IntegerMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntegerMatrix p(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Integer& xik = x(i, k);
            if (xik == 0) continue;
            for (std::size_t j = 0; j < y.cols_; ++j) p(i, j) += xik * y(k, j);
        }
    return p;
}

IntVector operator*(const IntegerMatrix& x, const IntVector& v) {
    if (x.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
    IntVector out(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) out[i] += x(i, k) * v[k];
    return out;
}

IntegerMatrix operator+(const IntegerMatrix& x, const IntegerMatrix& y) {
    IntegerMatrix s = x;
    for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] += y.a_[i];
    return s;
}

IntegerMatrix operator-(const IntegerMatrix& x, const IntegerMatrix& y) {
    IntegerMatrix s = x;
    for (std::size_t i = 0; i < s.a_.size(); ++i) s.a_[i] -= y.a_[i];
    return s;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ",[" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Integer determinant(const IntegerMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntegerMatrix a = m;
    Integer prev = 1;
    int sgn_flip = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(r, c));
            sgn_flip = -sgn_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sgn_flip * a(n - 1, n - 1);
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
    if (!m.is_square()) throw InputError("inverse of non-square matrix");
    Integer d = determinant(m);
    if (abs(d) != 1) throw InputError("matrix is not unimodular (det = " + d.get_str() + ")");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p][c] == 0) ++p;
        std::swap(a[p], a[c]);
        Rational piv = a[c][c];
        for (auto& v : a[c]) v /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    IntegerMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = a[i][n + j].get_num();
    return inv;
}

IntegerMatrix matrix_power(const IntegerMatrix& m, std::int64_t e) {
    IntegerMatrix base = e < 0 ? unimodular_inverse(m) : m;
    std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    IntegerMatrix r = IntegerMatrix::identity(m.rows());
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

UPoly char_poly(const IntegerMatrix& m) {
    // Faddeev-LeVerrier; every intermediate quantity is integral.
    if (!m.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Integer> c(n + 1);
    c[n] = 1;
    IntegerMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        IntegerMatrix am = m * mk;
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    std::vector<Rational> q(c.begin(), c.end());
    return UPoly(std::move(q));
}

IntegerMatrix eval_at_matrix(const UPoly& p, const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    IntegerMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c.get_den() != 1) throw std::invalid_argument("eval_at_matrix needs integer coefficients");
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += c.get_num();
    }
    return acc;
}

int nilpotency_index(const IntegerMatrix& m) {
    const std::size_t n = m.rows();
    IntegerMatrix p = m;
    for (std::size_t r = 1; r <= n; ++r) {
        if (p.is_zero()) return static_cast<int>(r);
        p = p * m;
    }
    return 0;
}

std::size_t rank(const IntegerMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

namespace {

// Column operations on a (mirrored into u) that leave a single nonzero entry,
// with positive sign, in row `row` among columns >= from. Returns the pivot
// column or npos when the row is already zero there.
std::size_t column_reduce_row(IntegerMatrix& a, IntegerMatrix& u, std::size_t row, std::size_t from) {
    const std::size_t n = a.cols();
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= f * a(r, src);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, dst) -= f * u(r, src);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, x), a(r, y));
        for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, x), u(r, y));
    };
    auto col_neg = [&](std::size_t x) {
        for (std::size_t r = 0; r < a.rows(); ++r) a(r, x) = -a(r, x);
        for (std::size_t r = 0; r < u.rows(); ++r) u(r, x) = -u(r, x);
    };
    while (true) {
        std::size_t best = n;
        for (std::size_t c = from; c < n; ++c)
            if (a(row, c) != 0 && (best == n || abs(a(row, c)) < abs(a(row, best)))) best = c;
        if (best == n) return static_cast<std::size_t>(-1);
        bool done = true;
        for (std::size_t c = from; c < n; ++c) {
            if (c == best || a(row, c) == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(row, c).get_mpz_t(), a(row, best).get_mpz_t());
            col_axpy(c, best, q);
            if (a(row, c) != 0) done = false;
        }
        if (done) {
            col_swap(from, best);
            if (a(row, from) < 0) col_neg(from);
            return from;
        }
    }
}

}  // namespace

std::vector<IntVector> integer_kernel(const IntegerMatrix& m) {
    const std::size_t n = m.cols();
    IntegerMatrix a = m;
    IntegerMatrix u = IntegerMatrix::identity(n);
    std::size_t next = 0;
    for (std::size_t r = 0; r < m.rows() && next < n; ++r)
        if (column_reduce_row(a, u, r, next) != static_cast<std::size_t>(-1)) ++next;
    std::vector<IntVector> basis;
    for (std::size_t c = next; c < n; ++c) basis.push_back(u.column(c));
    return lattice_echelon(std::move(basis));
}

std::vector<IntVector> lattice_echelon(std::vector<IntVector> vectors) {
    if (vectors.empty()) return vectors;
    const std::size_t n = vectors[0].size();
    std::vector<IntVector> rows = std::move(vectors);
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        // Euclid down column c among rows r..
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0)
            for (auto& x : rows[r]) x = -x;
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    // Reduce entries above pivots into [0, pivot).
    for (std::size_t k = 0; k < r; ++k) {
        std::size_t c = pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[k][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[k][j];
        }
    }
    return rows;
}

std::vector<Integer> smith_diagonal(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols(), k = std::min(R, C);
    for (std::size_t t = 0; t < k; ++t) {
        while (true) {
            // Smallest nonzero entry in the trailing block becomes the pivot.
            std::size_t pr = R, pc = C;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j)
                    if (a(i, j) != 0 && (pr == R || abs(a(i, j)) < abs(a(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == R) return [&] {
                std::vector<Integer> d(k);
                for (std::size_t i = 0; i < t; ++i) d[i] = a(i, i);
                return d;
            }();
            for (std::size_t j = 0; j < C; ++j) std::swap(a(t, j), a(pr, j));
            for (std::size_t i = 0; i < R; ++i) std::swap(a(i, t), a(i, pc));
            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: the pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t jj = t; jj < C; ++jj) a(t, jj) += a(i, jj);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        a(t, t) = abs(a(t, t));
    }
    std::vector<Integer> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = a(i, i);
    return d;
}

IntegerMatrix unimodular_completion(const IntVector& a) {
    const std::size_t n = a.size();
    IntegerMatrix row(1, n);
    for (std::size_t j = 0; j < n; ++j) row(0, j) = a[j];
    IntegerMatrix u = IntegerMatrix::identity(n);
    column_reduce_row(row, u, 0, 0);
    if (row(0, 0) != 1) throw InputError("vector " + to_string(a) + " is not primitive");
    return unimodular_inverse(u);
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector make_primitive(IntVector v) {
    Integer g = content(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

IntVector normalize_sign(IntVector v) {
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return v;
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

}  // namespace oredyn
