#pragma once

#include <vector>

#include "exactlab/rep.hpp"

namespace exactlab {

/// Ext^1(X, Y) for a path algebra (hereditary, so one cochain step suffices):
/// the cocycle space is C = (+)_a Hom(X_{s(a)}, Y_{t(a)}) and
/// Ext^1 = C / im Phi with Phi(f)_a = Y_a f_{s(a)} - f_{t(a)} X_a.
/// Classes are held in canonical coordinates: the non-pivot positions of the
/// coboundary image, so all bases and reports are deterministic.
struct ExtPresentation {
    Rep X;
    Rep Y;
    std::vector<std::size_t> arrow_offsets;  ///< block offsets in C; last entry = dim C
    Subspace coboundaries;                   ///< im Phi inside C
    std::vector<std::size_t> class_coords;   ///< canonical complement coordinates

    int dim() const { return static_cast<int>(class_coords.size()); }

    /// Canonical class coordinates of a cocycle (reduce mod coboundaries,
    /// read off the complement coordinates).
    std::vector<Rational> class_of(const std::vector<Rational>& cocycle) const;

    /// The canonical cocycle representative of a class.
    std::vector<Rational> cocycle_of(const std::vector<Rational>& cls) const;

    /// The per-arrow matrix blocks of a cocycle vector, and back.
    std::vector<Matrix> blocks_of(const std::vector<Rational>& cocycle) const;
    std::vector<Rational> cocycle_from_blocks(const std::vector<Matrix>& blocks) const;
};

ExtPresentation ext_space(const Rep& X, const Rep& Y);

int ext_dim(const Rep& X, const Rep& Y);

/// The Euler form <x, y> = sum_v x_v y_v - sum_a x_{s(a)} y_{t(a)};
/// equals dim Hom - dim Ext^1 for path algebras.
int euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y);

/// The conflation 0 -> Y -> E -> X -> 0 attached to a cocycle:
/// E_v = Y_v (+) X_v with arrow maps [[Y_a, zeta_a], [0, X_a]].
/// The zero cocycle yields the split conflation.
Conflation realize_extension(const ExtPresentation& pres, const std::vector<Rational>& cocycle);

/// A cocycle of an arbitrary conflation with sub Y and quotient X (built
/// from deterministic vertexwise splittings).
std::vector<Rational> conflation_cocycle(const ExtPresentation& pres, const Conflation& c);

/// Canonical class of a conflation.
std::vector<Rational> extension_class(const ExtPresentation& pres, const Conflation& c);

/// phi_* on cocycles: zeta_a |-> phi_{t(a)} o zeta_a, for phi : Y -> M.
std::vector<Rational> pushforward_cocycle(const ExtPresentation& from, const ExtPresentation& to,
                                          const MorphismRep& phi,
                                          const std::vector<Rational>& cocycle);

/// phi_* in canonical class coordinates.
std::vector<Rational> pushforward_class(const ExtPresentation& from, const ExtPresentation& to,
                                        const MorphismRep& phi, const std::vector<Rational>& cls);

/// Matrix of phi_* : Ext^1(X, Y) -> Ext^1(X, M) in canonical class bases.
Matrix pushforward_matrix(const ExtPresentation& from, const ExtPresentation& to,
                          const MorphismRep& phi);

}  // namespace exactlab
