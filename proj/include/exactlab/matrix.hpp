#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "exactlab/rational.hpp"

namespace exactlab {

/// Dense matrix over the exact rationals. Row-major storage; all operations
/// are exact. Sizes in this library are tiny (representation dimensions of
/// Dynkin / bounded Kronecker modules), so no sparsity or pivoting heuristics
/// are needed — plain exact Gauss-Jordan elimination is sufficient.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    /// Builds from nested initializer data; all rows must have equal length.
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Matrix& other) const;
    Matrix scaled(const Rational& c) const;
    Matrix transpose() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    /// Horizontal / vertical concatenation.
    static Matrix hstack(const Matrix& left, const Matrix& right);
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    /// Copies `src` into this matrix with upper-left corner at (i, j).
    void paste(std::size_t i, std::size_t j, const Matrix& src);
    Matrix block(std::size_t i, std::size_t j, std::size_t h, std::size_t w) const;

    std::vector<Rational> row(std::size_t i) const;
    /// Flattens row-major into a single vector.
    std::vector<Rational> vectorize() const;
    static Matrix from_vector(const std::vector<Rational>& v, std::size_t rows, std::size_t cols);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of Gauss-Jordan elimination: the reduced row-echelon form together
/// with the pivot column of each nonzero row.
struct Echelon {
    Matrix rref;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

Echelon echelon_form(Matrix m);

std::size_t rank(const Matrix& m);

/// Canonical basis of { x : m x = 0 }, returned as the rows of a matrix in
/// reduced row-echelon form (unique per subspace).
Matrix nullspace(const Matrix& m);

/// One solution of m x = b, if consistent.
std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b);

/// Inverse of a square matrix, if invertible.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace exactlab
