#include "exactlab/subspace.hpp"

#include <stdexcept>

namespace exactlab {

Subspace Subspace::span(const Matrix& rows, std::size_t ambient_dim) {
    if (rows.cols() != ambient_dim && rows.rows() > 0)
        throw std::invalid_argument("span: ambient dimension mismatch");
    Subspace out(ambient_dim);
    if (rows.rows() == 0) return out;
    Echelon ech = echelon_form(rows);
    out.basis_ = ech.rref.block(0, 0, ech.rank(), ambient_dim);
    out.pivots_ = std::move(ech.pivots);
    return out;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    return span(Matrix::identity(ambient_dim), ambient_dim);
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
    for (const Rational& x : reduce(v))
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("sum: ambient mismatch");
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    return span(Matrix::vstack(basis_, other.basis_), ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("intersect: ambient mismatch");
    if (is_zero() || other.is_zero()) return zero(ambient_);
    // Solve a U = b V: the nullspace of [U^T | -V^T] yields coefficient pairs
    // (a, b); the intersection is spanned by the corresponding a U.
    const Matrix stacked = Matrix::hstack(basis_.transpose(), other.basis_.transpose().scaled(-1));
    const Matrix coeffs = nullspace(stacked);
    if (coeffs.rows() == 0) return zero(ambient_);
    Matrix gens(coeffs.rows(), ambient_);
    for (std::size_t r = 0; r < coeffs.rows(); ++r)
        for (std::size_t i = 0; i < dim(); ++i) {
            const Rational& a = coeffs.at(r, i);
            if (a == 0) continue;
            for (std::size_t j = 0; j < ambient_; ++j)
                gens.at(r, j) += a * basis_.at(i, j);
        }
    return span(gens, ambient_);
}

std::vector<Rational> Subspace::reduce(const std::vector<Rational>& v) const {
    std::vector<Rational> out = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        const Rational c = out[pivots_[r]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) out[j] -= c * basis_.at(r, j);
    }
    return out;
}

std::vector<Rational> Subspace::coordinates(const std::vector<Rational>& v) const {
    std::vector<Rational> out(dim());
    for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
    return out;
}

}  // namespace exactlab
