#pragma once

#include "cokahler/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace cokahler {

using Vector = std::vector<Scalar>;
using SparseVector = std::map<std::size_t, Scalar>;

/// Dense row-major matrix over Q. Sizes here are desk-scale (a few hundred
/// rows at most), so plain Gaussian elimination is fine.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix fromColumns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator-(const Matrix& other) const;
    bool operator==(const Matrix& other) const = default;

    Matrix transpose() const;
    bool isZero() const;

    /// Reduced row echelon form in place; returns pivot columns in order.
    std::vector<std::size_t> rref();

    std::size_t rank() const;
    /// Basis of the null space, one vector per free column (free columns in
    /// increasing order), normalized with a 1 in its free column.
    std::vector<Vector> kernel() const;
    /// Basis of the column space given as the nonzero rows of the RREF of
    /// the transpose, so the result is canonical.
    std::vector<Vector> image() const;
    /// Some solution x of A x = b, or nullopt when inconsistent.
    std::optional<Vector> solve(const Vector& b) const;
    std::optional<Matrix> inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

bool isZero(const Vector& v);

/// Incrementally maintained reduced row echelon form over sparse rows.
/// Columns are processed in increasing index order, so callers control pivot
/// preference through their column numbering.
class SparseEchelon {
public:
    explicit SparseEchelon(std::size_t columns) : columns_(columns) {}

    std::size_t columns() const { return columns_; }
    std::size_t rank() const { return pivotRow_.size(); }

    /// Adds a row; returns true when it increased the rank.
    bool insert(SparseVector row);
    /// Reduces v against the current rows (result has no pivot-column entries).
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    bool isPivot(std::size_t column) const { return pivotRow_.contains(column); }

    std::vector<std::size_t> pivots() const;
    std::vector<std::size_t> freeColumns() const;
    /// Null space of the inserted rows, one vector per free column.
    std::vector<SparseVector> kernel() const;
    /// Rows in pivot order.
    std::vector<SparseVector> rows() const;

private:
    std::size_t columns_;
    std::map<std::size_t, SparseVector> pivotRow_;  // pivot column -> row, pivot entry 1
};

SparseVector toSparse(const Vector& v);
Vector toDense(const SparseVector& v, std::size_t size);

}  // namespace cokahler
