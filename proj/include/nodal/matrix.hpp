#pragma once

#include "nodal/scalar.hpp"

#include <optional>
#include <vector>

namespace nodal {

/// Dense matrix of Scalars over a single field backend. All elimination is
/// exact: Bareiss fraction-free over the integers for rational input,
/// plain Gaussian elimination over F_p.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Scalar fill = Scalar(0));
    explicit Matrix(std::vector<std::vector<Scalar>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void push_row(std::vector<Scalar> row);
    std::vector<Scalar> row(std::size_t r) const;
    Matrix transposed() const;
    Matrix without_row(std::size_t r) const;

    int rank() const;

    /// Basis of {v : M v = 0}, deterministic (free columns in order, pivot
    /// entries solved by back-substitution; each vector's first nonzero is 1).
    std::vector<std::vector<Scalar>> nullspace() const;

    /// Basis of {y : y^T M = 0} (dependencies among the rows).
    std::vector<std::vector<Scalar>> left_nullspace() const { return transposed().nullspace(); }

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    /// One solution x of M x = b, if the system is consistent.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// Inverse of a square nonsingular matrix.
    Matrix inverted() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace nodal
