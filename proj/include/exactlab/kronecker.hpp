#pragma once

#include <string>
#include <vector>

#include "exactlab/hom.hpp"
#include "exactlab/rep.hpp"

namespace exactlab {

/// A point label: a rational parameter or the infinity token. The label
/// set stands in for the full projective line; all symbolic results are
/// parameterized by the configured finite set.
struct KLabel {
    bool is_infinite = false;
    Rational value = Rational(0);

    bool operator==(const KLabel& other) const {
        return is_infinite == other.is_infinite && (is_infinite || value == other.value);
    }
    bool operator<(const KLabel& other) const {
        if (is_infinite != other.is_infinite) return !is_infinite;
        if (is_infinite) return false;
        return value < other.value;
    }
};

KLabel k_label(const Rational& v);
KLabel k_label_infinity();
std::string to_string(const KLabel& l);

enum class KPointKind { Preprojective, Preinjective, Regular, Prufer, Adic, Generic };

/// A point of the (symbolic) Ziegler spectrum of the Kronecker algebra:
/// finite-dimensional points P(n), Q(n), R(lambda, n) carry matrix models;
/// Pruefer, adic and generic points are symbolic tokens only.
struct KPoint {
    KPointKind kind = KPointKind::Generic;
    int index = 0;  ///< n for P/Q/R
    KLabel label;   ///< for R/Pruefer/adic

    bool operator==(const KPoint& other) const {
        switch (kind) {
            case KPointKind::Preprojective:
            case KPointKind::Preinjective:
                return kind == other.kind && index == other.index;
            case KPointKind::Regular:
                return kind == other.kind && index == other.index && label == other.label;
            case KPointKind::Prufer:
            case KPointKind::Adic:
                return kind == other.kind && label == other.label;
            case KPointKind::Generic:
                return kind == other.kind;
        }
        return false;
    }
    bool operator<(const KPoint& other) const {
        if (kind != other.kind) return kind < other.kind;
        if (label < other.label || other.label < label) return label < other.label;
        return index < other.index;
    }

    bool is_finite() const {
        return kind == KPointKind::Preprojective || kind == KPointKind::Preinjective ||
               kind == KPointKind::Regular;
    }
};

KPoint k_p(int n);
KPoint k_q(int n);
KPoint k_r(const KLabel& label, int n);
KPoint k_prufer(const KLabel& label);
KPoint k_adic(const KLabel& label);
KPoint k_generic();
std::string to_string(const KPoint& p);

/// A closed subset of the symbolic spectrum, in the shape the
/// classification provides: an explicit finite part plus Pruefer/adic
/// label sets and the generic flag.
struct KClosedSet {
    std::vector<KPoint> finite_points;
    std::vector<KLabel> prufer_labels;
    std::vector<KLabel> adic_labels;
    bool generic = false;

    bool operator==(const KClosedSet& other) const = default;
};

KClosedSet k_normalize(KClosedSet set);

/// The classified fp-idempotent ideal families of the Kronecker algebra.
struct KIdealFamily {
    enum Kind { RadP, RadQ, RadRS, RadOmegaPlusOne, IST } kind = RadP;
    std::vector<KLabel> s_labels;
    std::vector<KLabel> t_labels;
};

/// Configuration of the Kronecker backend: the index bound for matrix
/// models and the finite label set (default {0, 1, infinity}).
struct KronModel {
    int bound = 6;
    std::vector<KLabel> labels;
    Quiver quiver;
};

KronModel make_kron_model(int bound, std::vector<KLabel> labels = {});

/// Classification of an in-bound indecomposable by dimension vector:
/// (n-1, n) preprojective, (n, n-1) preinjective, (n, n) regular.
KPointKind k_classify_dims(const std::vector<int>& dims);

/// Matrix model of a finite point: P_n = (n-1, n) and Q_n = (n, n-1) with
/// the two truncated identities, R^lambda_n = (n, n) with (id, J_n(lambda))
/// and (J_n(0), id) for lambda = infinity. Validates indecomposability.
Rep k_rep(const KronModel& model, const KPoint& p);

/// All finite points with index <= n_max, sorted.
std::vector<KPoint> k_points_up_to_index(const KronModel& model, int n_max);

/// All finite points with total dimension <= total, sorted.
std::vector<KPoint> k_points_up_to_total_dim(const KronModel& model, int total);

int k_hom_dim(const KronModel& model, const KPoint& p, const KPoint& q);

/// Euler form of the Kronecker quiver on dimension vectors.
int k_euler_form(const std::vector<int>& x, const std::vector<int>& y);

/// The closed set attached to each classified ideal family.
KClosedSet family_closed_set(const KronModel& model, const KIdealFamily& fam);

/// The translate of "set union all projectives", reported as "result union
/// all injectives": symbolic points are fixed, finite points move by
/// tau Q_n = Q_{n+2}, tau R = R, tau P_n = P_{n-2} (projectives absorbed).
/// Throws when a preinjective translate leaves the bound.
KClosedSet k_tau_closed(const KronModel& model, const KClosedSet& set);

/// The almost split sequence ending at a finite point, built from explicit
/// matrices: 0 -> Q_{n+2} -> Q_{n+1}^2 -> Q_n -> 0,
/// 0 -> R_n -> R_{n-1} (+) R_{n+1} -> R_n -> 0 (R_0 = 0) and
/// 0 -> P_{n-2} -> P_{n-1}^2 -> P_n -> 0 (n >= 3).
Conflation k_ar_sequence(const KronModel& model, const KPoint& end);

/// Checks the almost split sequence ending at `end` against its expected
/// start: kernel-cokernel pair, and the inflation's cokernel functor is
/// supported exactly at the start with dimension one, over all in-bound
/// indecomposables.
bool k_verify_ar_sequence(const KronModel& model, const KPoint& end, const KPoint& expected_start);

enum class RadMembership { In, Out, InUpToDepth };

struct RadOmegaResult {
    RadMembership state = RadMembership::Out;
    int decided_at_depth = 0;
};

/// Membership of phi in the omega-power of the radical relative to a
/// finite set C of points: factorizations X -> C_1 -> ... -> C_n -> Y with
/// radical steps inside add C, tested by a layered span computation.
/// "In" is only reported for the structurally trivial zero morphism;
/// "Out" is definitive (some finite depth already fails);
/// "InUpToDepth" is an approximation, never a theorem.
RadOmegaResult rad_c_omega_membership(const KronModel& model, const MorphismRep& phi,
                                      const std::vector<KPoint>& C, int depth);

/// The sequence 0 -> P_1 -> R^lambda_1 -> Q_1 -> 0.
Conflation k_p1_sequence(const KronModel& model, const KLabel& lambda);

struct P1Case {
    KPoint z;
    int morphism_index = 0;
    std::string branch;
    bool passed = false;
};

struct P1Report {
    bool sequence_is_conflation = false;
    bool sequence_non_split = false;
    std::vector<P1Case> cases;

    bool ok() const {
        if (!sequence_is_conflation || !sequence_non_split) return false;
        for (const P1Case& c : cases)
            if (!c.passed) return false;
        return true;
    }
};

/// Bounded mechanization of the case analysis showing 0 -> P_1 ->
/// R^lambda_1 -> Q_1 -> 0 is almost exact: for every in-bound
/// indecomposable Z of total dimension <= dim_bound and every sampled
/// morphism u : P_1 -> Z, the pushout splits (u = 0), the combined map
/// splits (Z = P_1), the mono into a preprojective has regular cokernel
/// (Hom-vanishing test), or the pushout is a mono with cokernel Q_1 from a
/// non-preprojective source. Throws if dim_bound < 3 (no preprojective
/// beyond P_1 in range).
P1Report verify_almost_exact_p1(const KronModel& model, const KLabel& lambda, int dim_bound);

}  // namespace exactlab
