#pragma once

#include <vector>

#include "exactlab/matrix.hpp"

namespace exactlab {

/// A linear subspace of Q^n held in canonical form: the basis matrix is the
/// unique reduced row-echelon representative, so subspaces compare by value
/// and every derived object (ideals, supports, reports) is deterministic.
class Subspace {
  public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

    /// Canonicalizes the row span of `rows` (rows of any rank, any order).
    static Subspace span(const Matrix& rows, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool contains(const std::vector<Rational>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& other) const = default;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;

    /// Reduces v modulo the subspace: subtracts the unique combination of
    /// basis rows matching v on the pivot coordinates. The result is zero
    /// iff v lies in the subspace.
    std::vector<Rational> reduce(const std::vector<Rational>& v) const;

    /// Coordinates of v in the canonical basis (pivot coordinates); only
    /// meaningful when contains(v).
    std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

  private:
    std::size_t ambient_ = 0;
    Matrix basis_;  // RREF rows
    std::vector<std::size_t> pivots_;
};

}  // namespace exactlab
