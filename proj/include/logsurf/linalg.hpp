// Copyright (C) 2026 The logsurf authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "logsurf/rational.hpp"

namespace logsurf {

/// Dense square-or-rectangular matrix over Q, row major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_symmetric() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational determinant(Matrix m);

/// Solves A x = b exactly; nullopt when A is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

/// Sylvester's criterion on -A: all leading principal minors of -A positive.
bool is_negative_definite(const Matrix& a);

}  // namespace logsurf
