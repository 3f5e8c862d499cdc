#pragma once

#include <vector>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/ext.hpp"
#include "exactlab/fp_functor.hpp"
#include "exactlab/ideal.hpp"

namespace exactlab {

/// An exact structure on the module category of a representation-finite
/// algebra, encoded by its closed set: the sorted indices of the
/// indecomposables that are injective relative to the structure. The closed
/// set always contains the ordinary injectives; conflations that generated
/// the structure are kept when known.
struct ExactStructure {
    std::vector<int> closed_set;
    std::vector<Conflation> generators;

    bool operator==(const ExactStructure& other) const {
        return closed_set == other.closed_set;
    }
};

/// Sorts, deduplicates and validates a closed set (must contain every
/// injective indecomposable).
std::vector<int> normalize_closed_set(const ARQuiver& ar, std::vector<int> set);

/// The largest (abelian) structure: closed set = the injectives only, so
/// every kernel-cokernel pair is a conflation.
ExactStructure e_top(const ARQuiver& ar);

/// The smallest (split) structure: closed set = all indecomposables, so
/// only split pairs are conflations.
ExactStructure e_bot(const ARQuiver& ar);

/// The smallest exact structure in which every given conflation is exact:
/// the closed set drops exactly the support of each inflation's cokernel
/// functor. Validates that every generator is a kernel-cokernel pair.
ExactStructure generate(const ARQuiver& ar, const std::vector<Conflation>& conflations);

/// Whether the conflation is exact in E: the inflation's cokernel functor
/// vanishes on every module of the closed set. Validates the kernel-
/// cokernel property first.
bool is_exact_in(const ARQuiver& ar, const ExactStructure& E, const Conflation& c);

/// Whether f is an E-inflation: a mono whose associated conflation is
/// exact in E.
bool is_e_inflation(const ARQuiver& ar, const ExactStructure& E, const MorphismRep& f);

/// The conflation (f, coker f) of a mono f.
Conflation mono_conflation(const MorphismRep& f);

/// The ideal of morphisms factoring through an E-injective module.
Ideal injectivity_ideal(const ARQuiver& ar, const ExactStructure& E);

/// The ideal of morphisms factoring through an E-projective module,
/// computed combinatorially: the E-projectives are the ordinary projectives
/// together with the inverse translates of the non-injective part of the
/// closed set.
Ideal projectivity_ideal(const ARQuiver& ar, const ExactStructure& E);

/// The E-projective indecomposables used by projectivity_ideal, ascending.
std::vector<int> e_projectives(const ARQuiver& ar, const ExactStructure& E);

/// The dual exact structure on the opposite algebra, generated by the
/// duals of the almost split conflations at the modules outside the closed
/// set (an independent computation, not the translate formula).
ExactStructure matlis_dual_structure(const MatlisContext& ctx, const ExactStructure& E);

/// The projectivity ideal by the duality route: dualize the structure,
/// take its injectivity ideal, transport back.
Ideal projectivity_ideal_via_duality(const MatlisContext& ctx, const ExactStructure& E);

/// The E-relative Ext group rel_ext(E; X, Y) for indecomposables X, Y (by
/// index), as the subspace of extension classes killed by pushforward
/// along every map from Y to a module of the closed set.
struct RelExt {
    ExtPresentation pres;  ///< for conflations 0 -> Y -> E -> X -> 0
    Subspace classes;      ///< subspace of the class coordinate space

    int dim() const { return static_cast<int>(classes.dim()); }
};

RelExt rel_ext(const ARQuiver& ar, const ExactStructure& E, int x, int y);

/// One failed instance of the relative Auslander-Reiten formula.
struct ArFormulaMismatch {
    int x = -1;
    int y = -1;
    int rel_dim = -1;
    int inj_route = -1;   ///< dim Hom(Y, tau X) - dim I_E(Y, tau X), 0 for X projective
    int proj_route = -1;  ///< dim Hom(tau^- Y, X) - dim P_E(tau^- Y, X), 0 for Y injective
};

struct ArFormulaReport {
    int checked = 0;
    std::vector<ArFormulaMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Checks dim rel_ext(E; X, Y) against both sides of the relative
/// Auslander-Reiten formula for every ordered pair of indecomposables.
ArFormulaReport check_relative_ar_formula(const ARQuiver& ar, const ExactStructure& E);

/// Whether f fails E-exactness in total dimension exactly one across the
/// closed set (the defect of an almost split conflation's inflation).
bool is_almost_e_monic(const ARQuiver& ar, const ExactStructure& E, const MorphismRep& f);

/// The structure whose closed set is {M} plus the injectives; M must be
/// non-injective (throws otherwise).
ExactStructure e_of_module(const ARQuiver& ar, int i);

/// Whether the closed set has exactly one non-injective member (the
/// structures directly below the split one).
bool is_maximal(const ARQuiver& ar, const ExactStructure& E);

/// A single conflation generating E: the direct sum of the almost split
/// sequences at the modules outside the closed set; the zero conflation
/// for the abelian structure.
Conflation single_generator(const ARQuiver& ar, const ExactStructure& E);

/// Lattice operations: meet = union of closed sets (fewer conflations),
/// join = intersection of closed sets (more conflations).
ExactStructure meet(const ARQuiver& ar, const ExactStructure& a, const ExactStructure& b);
ExactStructure join(const ARQuiver& ar, const ExactStructure& a, const ExactStructure& b);

/// All exact structures: one per subset of the non-injective
/// indecomposables, in ascending bitmask order over the ascending
/// non-injectives.
std::vector<ExactStructure> enumerate_all(const ARQuiver& ar);

/// Splits an arbitrary subset of the indecomposables into an exact
/// structure (adding the injectives) and the retained injective part;
/// compose_closed_set is the inverse.
std::pair<ExactStructure, std::vector<int>> closed_set_decompose(const ARQuiver& ar,
                                                                 const std::vector<int>& set);
std::vector<int> compose_closed_set(const ARQuiver& ar, const ExactStructure& E,
                                    const std::vector<int>& injective_part);

/// The translate of a set containing all projectives: tau of the
/// non-projective part plus all injectives. tau_closed_inverse undoes it.
std::vector<int> tau_closed(const ARQuiver& ar, const std::vector<int>& set);
std::vector<int> tau_closed_inverse(const ARQuiver& ar, const std::vector<int>& set);

/// Enumeration through the generating route: every subset of the almost
/// split sequences is fed to generate, and the distinct closed sets are
/// collected. Bijectivity means distinct closed sets == number of subsets.
struct OracleEnumeration {
    std::vector<ExactStructure> structures;  ///< sorted by closed set
    bool bijective = false;
};

OracleEnumeration oracle_enumerate(const ARQuiver& ar);

}  // namespace exactlab
