#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cato/rational.hpp"

namespace cato {

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector column(std::size_t c) const;

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

    Matrix transpose() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    RationalVector data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
RationalVector operator*(const Matrix& a, const RationalVector& v);

RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector scale(const Rational& s, const RationalVector& v);
bool is_zero(const RationalVector& v);

/// Stacks matrices with equal column counts.
Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols);

/// Builds a matrix whose columns are the given vectors (all of length `rows`).
Matrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

struct RowEchelon {
    Matrix reduced;                  ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each non-zero row
};

RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<RationalVector> nullspace(const Matrix& m);

/// Some x with m x = b (free variables set to zero), or nothing if inconsistent.
std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b);

/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

}  // namespace cato
