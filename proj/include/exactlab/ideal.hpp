#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/fp_functor.hpp"
#include "exactlab/subspace.hpp"

namespace exactlab {

/// An ordinal exponent of the form omega * q + r (q, r >= 0).
struct OrdinalExpr {
    int omega_coeff = 0;
    int finite_part = 0;

    bool operator==(const OrdinalExpr&) const = default;
};

/// A two-sided ideal of the module category of a representation-finite
/// algebra, stored as its restriction to the indecomposables: entry (i, j)
/// is a subspace of the coordinate space of Hom(M_i, M_j) with respect to
/// the canonical hom basis of the AR quiver. Values on arbitrary modules
/// are recovered functorially (ideal_value_at), so this finite table is a
/// complete description.
class Ideal {
  public:
    Ideal() = default;
    /// The zero ideal on the given AR quiver.
    explicit Ideal(const ARQuiver& ar);

    const ARQuiver& ar() const { return *ar_; }
    int count() const { return static_cast<int>(ar_->count()); }

    const Subspace& at(int i, int j) const;
    void set(int i, int j, Subspace s);

    /// Sum of the dimensions of all entries.
    int total_dim() const;

    /// Equality of ideals over the same AR quiver instance.
    bool operator==(const Ideal& other) const;
    /// Entrywise containment: *this (i, j) <= other (i, j) for all i, j.
    bool subset_of(const Ideal& other) const;

    bool contains_coords(int i, int j, const std::vector<Rational>& coords) const;
    /// Whether the identity of the i-th indecomposable lies in the ideal.
    bool contains_identity(int i) const;
    /// Indices i with 1_{M_i} in the ideal, ascending.
    std::vector<int> unit_objects() const;

    /// The canonical basis of entry (i, j) lifted back to morphisms.
    std::vector<MorphismRep> basis_morphisms(int i, int j) const;

  private:
    const ARQuiver* ar_ = nullptr;
    std::vector<Subspace> spaces_;  // row-major count x count
};

Ideal zero_ideal(const ARQuiver& ar);
Ideal hom_ideal(const ARQuiver& ar);

/// The radical: all of Hom(M_i, M_j) for i != j (distinct indecomposables
/// here are never isomorphic), and rad End(M_i) on the diagonal.
Ideal radical_ideal(const ARQuiver& ar);

/// The ideal of morphisms factoring through add of the given
/// indecomposables: entry (i, j) is the sum over u of
/// Hom(M_u, M_j) o Hom(M_i, M_u).
Ideal ideal_from_add(const ARQuiver& ar, const std::vector<int>& unit_objects);

/// The two-sided ideal generated by arbitrary morphisms between modules
/// over the same algebra: generators are cut into indecomposable sandwich
/// components, then saturated under composition on both sides.
Ideal ideal_generate(const ARQuiver& ar, const std::vector<MorphismRep>& generators);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// Composition product: entry (i, j) of the result is spanned by g o f over
/// f in inner(i, k) and g in outer(k, j). Written multiplicatively this is
/// "outer after inner".
Ideal ideal_product(const Ideal& outer, const Ideal& inner);

/// I^n for n >= 1 (the product of n copies of I).
Ideal ideal_power(const Ideal& ideal, int n);

/// The stable value of the descending chain I >= I^2 >= ... ; throws if the
/// chain fails to stabilize within total-dimension-many steps (impossible
/// for a genuinely descending chain, kept as an internal guard).
Ideal omega_power(const Ideal& ideal);

/// I^(omega q + r). For q = 0 this is the plain power I^r (r >= 1); for
/// q >= 1 the successor steps continue multiplying by the limit power, so
/// the exponent omega q + r yields (I^(omega q))^(r + 1).
Ideal ordinal_power(const Ideal& ideal, const OrdinalExpr& e);

/// The value I(X, Y) on arbitrary modules, as a subspace of the coordinate
/// space of hom_basis(X, Y): those phi whose sandwiches b o phi o a through
/// every indecomposable pair land in the corresponding entry of I.
Subspace ideal_value_at(const Ideal& ideal, const Rep& X, const Rep& Y);

/// Membership of an arbitrary morphism via the sandwich criterion.
bool ideal_contains(const Ideal& ideal, const MorphismRep& phi);

/// Bundles the canonical bases of I(source, N) over all indecomposables N
/// into a single morphism M_source -> direct sum; the zero row yields the
/// map to the zero module. Every morphism in I out of M_source factors
/// through this map.
MorphismRep left_approximation(const Ideal& ideal, int source_index);

/// Whether every morphism in I out of M_source factors through f (f must
/// start at the source indecomposable). With strongly = true the factoring
/// morphism is required to lie in I itself.
bool is_left_factoring(const Ideal& ideal, int source_index, const MorphismRep& f, bool strongly);

/// Sampled form of left idempotency: every sampled left-I-factoring
/// morphism out of an indecomposable (ideal basis elements, seeded small
/// combinations, and the canonical left approximations) also factors
/// strongly. Deterministic for a fixed seed.
bool sampled_left_idempotent(const Ideal& ideal, std::uint64_t seed);

struct FpIdempotentCheck {
    bool holds = false;
    std::vector<int> unit_objects;  ///< the witness set U = {i : 1_i in I}
};

/// An ideal is fp-idempotent exactly when it is the add-ideal of its own
/// unit objects; returns the verdict with the witness set.
FpIdempotentCheck is_fp_idempotent(const Ideal& ideal);

/// The largest fp-idempotent ideal contained in I, namely the add-ideal of
/// the unit objects of I.
Ideal max_fp_idempotent_subideal(const Ideal& ideal);

/// Trace factorization of phi : X -> Y through an fp-idempotent ideal:
/// phi = trace.inclusion o middle o coreduction.projection, where the
/// coreduction kills the common kernel of all maps from X to unit objects
/// and the trace is the sum of all images of maps from unit objects in Y.
struct TraceFactorization {
    QuotRep coreduction;  ///< X ->> C'
    SubRep trace;         ///< C'' >-> Y
    MorphismRep middle;   ///< C' -> C''
};

/// Factors a member of an fp-idempotent ideal through its canonical trace
/// data; throws if phi is not in the ideal or the ideal is not
/// fp-idempotent. The middle map and both identities 1_{C'}, 1_{C''} are
/// verified to lie in the ideal.
TraceFactorization trace_factorize(const Ideal& ideal, const MorphismRep& phi);

/// The ideal of morphisms annihilated by F: entry (i, j) consists of the
/// phi with F(phi) = 0.
Ideal ideal_of_functor_vanishing(const ARQuiver& ar, const FpFunctor& F);

/// Transport of structures across the Matlis duality D = Hom_Q(-, Q): the
/// AR quiver of the opposite algebra together with, for every
/// indecomposable M of the original, the index of the indecomposable
/// isomorphic to D(M) and an explicit isomorphism D(M) -> M'_{sigma(i)}.
struct MatlisContext {
    const ARQuiver* original = nullptr;
    ARQuiver dual;
    std::vector<int> dual_index;
    std::vector<MorphismRep> dual_iso;
};

MatlisContext make_matlis_context(const ARQuiver& ar);

/// The dual ideal on the opposite algebra: entry (sigma(j), sigma(i)) is
/// the image of I(i, j) under phi |-> c_i o D(phi) o c_j^{-1}.
Ideal matlis_dual_ideal(const MatlisContext& ctx, const Ideal& ideal);

/// Transports an ideal over the opposite algebra back to the original, by
/// inverting the duality transport on every hom space.
Ideal matlis_dual_ideal_back(const MatlisContext& ctx, const Ideal& dual_ideal);

/// Deterministic corpus of generated ideals: each is generated by one or
/// two morphisms with small integer coordinates in the canonical hom bases.
std::vector<Ideal> random_ideal_corpus(const ARQuiver& ar, int count, std::uint64_t seed);

}  // namespace exactlab
