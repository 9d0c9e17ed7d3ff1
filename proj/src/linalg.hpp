#pragma once

#include "hkfs/rational.hpp"

#include <optional>
#include <vector>

namespace hkfs {

/// Small dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigRational> data_;
};

BigRational determinant(Matrix m);
std::size_t rank(Matrix m);

/// Solves the square system [A | b] (n x (n+1)); nullopt if A is singular.
std::optional<std::vector<BigRational>> solve_unique(Matrix augmented);

}  // namespace hkfs
