#include "exactlab/matrix.hpp"

#include <stdexcept>

namespace exactlab {

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(text, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix shape mismatch in -");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix shape mismatch in *");
    Matrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = c * data_[k];
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch in apply");
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix out(left.rows(), left.cols() + right.cols());
    out.paste(0, 0, left);
    out.paste(0, left.cols(), right);
    return out;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack col mismatch");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    out.paste(0, 0, top);
    out.paste(top.rows(), 0, bottom);
    return out;
}

void Matrix::paste(std::size_t i, std::size_t j, const Matrix& src) {
    if (i + src.rows() > rows_ || j + src.cols() > cols_)
        throw std::invalid_argument("paste out of range");
    for (std::size_t r = 0; r < src.rows(); ++r)
        for (std::size_t c = 0; c < src.cols(); ++c) at(i + r, j + c) = src.at(r, c);
}

Matrix Matrix::block(std::size_t i, std::size_t j, std::size_t h, std::size_t w) const {
    if (i + h > rows_ || j + w > cols_) throw std::invalid_argument("block out of range");
    Matrix out(h, w);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < w; ++c) out.at(r, c) = at(i + r, j + c);
    return out;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
    std::vector<Rational> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

std::vector<Rational> Matrix::vectorize() const { return data_; }

Matrix Matrix::from_vector(const std::vector<Rational>& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("from_vector size mismatch");
    Matrix out(rows, cols);
    out.data_ = v;
    return out;
}

Echelon echelon_form(Matrix m) {
    Echelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pivot_row, j));
        const Rational inv = 1 / m.at(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m.at(i, col) == 0) continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(pivot_row, j);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.rref = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return echelon_form(m).rank(); }

Matrix nullspace(const Matrix& m) {
    const Echelon ech = echelon_form(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : ech.pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r)
            v[ech.pivots[r]] = -ech.rref.at(r, free_col);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return Matrix(0, m.cols());
    // Re-echelonize so the returned basis is the canonical representative of
    // the kernel subspace, independent of the free-column enumeration.
    Echelon canon = echelon_form(Matrix::from_rows(basis));
    return canon.rref.block(0, 0, canon.rank(), m.cols());
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    aug.paste(0, 0, m);
    for (std::size_t i = 0; i < m.rows(); ++i) aug.at(i, m.cols()) = b[i];
    const Echelon ech = echelon_form(std::move(aug));
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
        if (ech.pivots[r] == m.cols()) return std::nullopt;  // 0 = 1 row: inconsistent
        x[ech.pivots[r]] = ech.rref.at(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    const Echelon ech = echelon_form(Matrix::hstack(m, Matrix::identity(m.rows())));
    if (ech.rank() < m.rows() || (m.rows() > 0 && ech.pivots.back() >= m.rows()))
        return std::nullopt;
    return ech.rref.block(0, m.cols(), m.rows(), m.cols());
}

}  // namespace exactlab
