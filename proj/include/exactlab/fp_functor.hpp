#pragma once

#include <vector>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/hom.hpp"
#include "exactlab/rep.hpp"

namespace exactlab {

/// A finitely presented (contravariant) functor on the module category,
/// given by a presenting morphism f : A -> B:
///   F = coker( Hom(f, -) : Hom(B, -) -> Hom(A, -) ).
/// Every value F(M) is the cokernel of a concrete matrix, so dimensions,
/// supports and vanishing questions reduce to rank computations.
struct FpFunctor {
    MorphismRep presenter;
};

/// dim F(M) = dim Hom(A, M) - rank Hom(f, M).
int eval_dim(const FpFunctor& F, const Rep& M);

/// Indices of the indecomposables with F != 0, ascending.
std::vector<int> support(const FpFunctor& F, const ARQuiver& ar);

bool is_zero_functor(const FpFunctor& F, const ARQuiver& ar);

/// The simple functor S_M concentrated at the indecomposable with index i,
/// presented by a left almost split map out of it.
FpFunctor simple_functor(const ARQuiver& ar, int i);

/// Multiplicity [F : S_M] of the simple at index i in F, which equals
/// dim F(M) for M indecomposable.
int simple_multiplicity(const FpFunctor& F, const ARQuiver& ar, int i);

/// Direct sum of functors = functor presented by the direct sum of the
/// presenters. An empty family is the zero functor, presented by the
/// identity of the zero representation.
FpFunctor functor_direct_sum(const Quiver& q, const std::vector<FpFunctor>& fs);

/// Whether F(phi) = 0 for phi : X -> Y, i.e. phi o h factors through the
/// presenter for every h : A -> X.
bool functor_kills(const FpFunctor& F, const MorphismRep& phi);

}  // namespace exactlab
