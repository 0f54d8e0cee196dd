#include "cato/linalg.hpp"

#include <stdexcept>

namespace cato {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalVector Matrix::row(std::size_t r) const {
    return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::column(std::size_t c) const {
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= s;
    return out;
}

RationalVector operator*(const Matrix& a, const RationalVector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RationalVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (v[j] != 0 && a(i, j) != 0) out[i] += a(i, j) * v[j];
    return out;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
    RationalVector out = a;
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

RationalVector scale(const Rational& s, const RationalVector& v) {
    RationalVector out = v;
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
        r0 += b.rows();
    }
    return out;
}

Matrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
    Matrix out(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
        for (std::size_t i = 0; i < rows; ++i) out(i, j) = columns[j][i];
    }
    return out;
}

RowEchelon row_reduce(Matrix m) {
    RowEchelon result;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t pivot = lead_row;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != lead_row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(lead_row, j));
        Rational inv = 1 / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(lead_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == lead_row || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(lead_row, j) != 0) m(i, j) -= f * m(lead_row, j);
        }
        result.pivots.push_back(c);
        ++lead_row;
    }
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<RationalVector> nullspace(const Matrix& m) {
    RowEchelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RationalVector> solve(const Matrix& m, const RationalVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RowEchelon e = row_reduce(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

}  // namespace cato
