// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#include "logsurf/linalg.hpp"

#include <utility>

#include "logsurf/errors.hpp"

namespace logsurf {

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
            det = -det;
        }
        det *= m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            const Rational f = m(r, col) / m(col, col);
            for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
        }
    }
    return det;
}

std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw InvalidInput("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Rational f = a(r, col) / a(col, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a(i, i);
    return b;
}

bool is_negative_definite(const Matrix& a) {
    if (!a.is_symmetric()) return false;
    // Symmetric elimination on -A: every pivot must be strictly positive.
    const std::size_t n = a.rows();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = -a(i, j);
    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k).sign() <= 0) return false;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (m(r, k).is_zero()) continue;
            const Rational f = m(r, k) / m(k, k);
            for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
    }
    return true;
}

}  // namespace logsurf
