#pragma once

#include <vector>

#include "exactlab/matrix.hpp"
#include "exactlab/quiver.hpp"
#include "exactlab/subspace.hpp"

namespace exactlab {

/// A finite-dimensional representation of a quiver over Q.
///
/// `dims[v]` is the dimension of the vector space at vertex `v`, and
/// `arrow_maps[i]` is the matrix of the linear map attached to `arrows[i]`,
/// of shape dims[target] x dims[source], acting on column vectors.
struct Rep {
    Quiver quiver;
    std::vector<int> dims;
    std::vector<Matrix> arrow_maps;

    bool operator==(const Rep& other) const;
};

/// A morphism of representations, stored as one matrix per vertex.
/// `components[v]` has shape target.dims[v] x source.dims[v].
struct MorphismRep {
    Rep source;
    Rep target;
    std::vector<Matrix> components;

    bool operator==(const MorphismRep& other) const;
};

/// An inflation/deflation pair A >--> B -->> C.
struct Conflation {
    MorphismRep inflation;
    MorphismRep deflation;
};

/// Throws std::invalid_argument unless dims/arrow shapes are consistent.
void validate_rep(const Rep& m);

/// True when the components have the right shapes and commute with the
/// arrow maps of source and target.
bool is_valid_morphism(const MorphismRep& f);

Rep zero_rep(const Quiver& q);

/// The simple representation concentrated at `vertex`.
Rep simple_rep(const Quiver& q, int vertex);

int total_dim(const Rep& m);
bool is_zero_rep(const Rep& m);

MorphismRep identity_morphism(const Rep& m);
MorphismRep zero_morphism(const Rep& source, const Rep& target);

/// g o f; requires f.target == g.source.
MorphismRep compose(const MorphismRep& g, const MorphismRep& f);

MorphismRep add(const MorphismRep& f, const MorphismRep& g);
MorphismRep scale(const Rational& c, const MorphismRep& f);
bool is_zero_morphism(const MorphismRep& f);
bool is_iso(const MorphismRep& f);

/// Componentwise inverse; requires is_iso.
MorphismRep inverse_morphism(const MorphismRep& f);

/// A direct sum together with its canonical inclusions and projections,
/// in the order the summands were given.
struct DirectSumRep {
    Rep sum;
    std::vector<MorphismRep> inclusions;
    std::vector<MorphismRep> projections;
};

DirectSumRep direct_sum(const std::vector<Rep>& summands);

/// Builds X -> Y_0 (+) ... (+) Y_k from parts[i] : X -> Y_i.
MorphismRep into_sum(const DirectSumRep& target, const std::vector<MorphismRep>& parts);

/// Builds X_0 (+) ... (+) X_k -> Y from parts[i] : X_i -> Y.
MorphismRep from_sum(const DirectSumRep& source, const std::vector<MorphismRep>& parts);

/// Block-diagonal sum of morphisms parts[i] : X_i -> Y_i.
MorphismRep sum_of_morphisms(const DirectSumRep& source, const DirectSumRep& target,
                             const std::vector<MorphismRep>& parts);

/// A subrepresentation presented by its inclusion.
struct SubRep {
    Rep rep;
    MorphismRep inclusion;
};

/// A quotient representation presented by its projection.
struct QuotRep {
    Rep rep;
    MorphismRep projection;
};

SubRep kernel(const MorphismRep& f);
QuotRep cokernel(const MorphismRep& f);

/// Vertex-wise pushout of f : X -> Y along h : X -> Z, i.e. the cokernel of
/// (f, -h) : X -> Y (+) Z, with the universal maps from Y and Z.
struct PushoutRep {
    Rep rep;
    MorphismRep from_first;   ///< Y -> P
    MorphismRep from_second;  ///< Z -> P
};

PushoutRep pushout(const MorphismRep& f, const MorphismRep& h);

/// Per-vertex column spans of f, as subspaces of the target spaces.
std::vector<Subspace> image_subspaces(const MorphismRep& f);

/// Subrepresentation on the given per-vertex subspaces; throws unless the
/// subspaces are closed under the arrow maps.
SubRep sub_rep(const Rep& m, const std::vector<Subspace>& spaces);

/// Quotient by a collection of arrow-closed per-vertex subspaces.
QuotRep quotient_rep(const Rep& m, const std::vector<Subspace>& spaces);

/// Largest semisimple subrepresentation: at each vertex the intersection of
/// the kernels of the arrow maps leaving that vertex.
std::vector<Subspace> socle_subspaces(const Rep& m);

/// The dual representation over the opposite quiver (transpose everything).
Rep matlis_dual_rep(const Rep& m);

/// Dual morphism D(f) : D(target) -> D(source).
MorphismRep matlis_dual_morphism(const MorphismRep& f);

}  // namespace exactlab
