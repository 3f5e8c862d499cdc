#pragma once

#include <optional>
#include <vector>

#include "exactlab/rep.hpp"

namespace exactlab {

/// Canonical basis of Hom(X, Y): the reduced row-echelon basis of the
/// intertwiner equations' solution space, in a fixed vectorization
/// (vertex order, row-major within each component). Deterministic, so every
/// downstream coordinate computation is reproducible.
std::vector<MorphismRep> hom_basis(const Rep& X, const Rep& Y);

int hom_dim(const Rep& X, const Rep& Y);

/// Flattens a morphism into the vectorization used by hom_basis.
std::vector<Rational> morphism_vector(const MorphismRep& f);

/// Inverse of morphism_vector for given endpoint representations.
MorphismRep morphism_from_vector(const Rep& X, const Rep& Y, const std::vector<Rational>& v);

/// Coordinates of f in a basis of (a subspace of) Hom(source, target);
/// throws if f is not in the span.
std::vector<Rational> coordinates_in_basis(const MorphismRep& f,
                                           const std::vector<MorphismRep>& basis);

/// Matrix of Hom(f, M) : Hom(Y, M) -> Hom(X, M), g |-> g o f, with respect to
/// the given bases (columns indexed by basis_from).
Matrix precomposition_matrix(const std::vector<MorphismRep>& basis_from,
                             const std::vector<MorphismRep>& basis_to, const MorphismRep& f);

/// Matrix of Hom(M, f) : Hom(M, X) -> Hom(M, Y), h |-> f o h.
Matrix postcomposition_matrix(const std::vector<MorphismRep>& basis_from,
                              const std::vector<MorphismRep>& basis_to, const MorphismRep& f);

bool is_mono(const MorphismRep& f);
bool is_epi(const MorphismRep& f);

/// True when i is a kernel of p and p is a cokernel of i (vertexwise:
/// i mono, p epi, im i = ker p).
bool is_kernel_cokernel_pair(const MorphismRep& i, const MorphismRep& p);

/// Sum of the traces of the components of an endomorphism.
Rational total_trace(const MorphismRep& endo);

/// Radical of End(M) as coordinate vectors with respect to `basis` (a basis
/// of End(M)): the null space of the trace form tr(x y) on the acting
/// algebra, which over Q cuts out exactly the nilpotent radical.
Subspace end_radical_subspace(const Rep& M, const std::vector<MorphismRep>& basis);

/// Local endomorphism ring test: dim End(M)/rad End(M) == 1.
bool is_indecomposable(const Rep& M);

/// r with r o f = id, if f is a split mono.
std::optional<MorphismRep> retraction(const MorphismRep& f);

/// s with p o s = id, if p is a split epi.
std::optional<MorphismRep> section(const MorphismRep& p);

/// Multiplicity of each candidate as a direct summand of M; candidates must
/// be pairwise non-isomorphic indecomposables covering all summands of M
/// (throws otherwise). Splitting is done by idempotents built from a
/// summand witness pair r : M -> I, s : I -> M with r o s invertible.
std::vector<int> decompose_against(const Rep& M, const std::vector<Rep>& candidates);

}  // namespace exactlab
