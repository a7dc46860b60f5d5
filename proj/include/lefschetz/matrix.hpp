#pragma once

#include "lefschetz/rational.hpp"

#include <optional>
#include <vector>

namespace lefschetz {

/// Dense exact matrix over the rationals. Rank, kernels and determinants go
/// through fraction-free (Bareiss) elimination after clearing row
/// denominators; there is no pivot tolerance anywhere. Zero-dimensional
/// shapes are legal so operator compositions across empty degrees stay
/// well-typed.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols);
    static Matrix identity(int m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Matrix&) const = default;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    int rank() const;
    Rational determinant() const;

    /// Canonical kernel basis: one vector per free column in ascending
    /// order, scaled to a primitive integer vector whose first nonzero
    /// entry is positive.
    std::vector<std::vector<Rational>> kernel_basis() const;

    std::optional<Matrix> inverse() const;

    /// One solution of A x = b with free variables set to zero, or nullopt
    /// when the system is inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Incrementally maintained exact row space (reduced echelon rows). Used by
/// the span-saturation searches; adding a vector reports whether the rank
/// grew.
class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool contains(const std::vector<Rational>& v) const;
    bool add(std::vector<Rational> v);

private:
    std::vector<Rational> reduce(std::vector<Rational> v) const;

    int width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

}  // namespace lefschetz
