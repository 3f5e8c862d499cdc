#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exactlab/algebra_spec.hpp"
#include "exactlab/ar_quiver.hpp"
#include "exactlab/json_io.hpp"

namespace exactlab {

/// Tunables shared by the verification suites; the defaults are the pinned
/// acceptance parameters.
struct SuiteOptions {
    int axiom_samples = 200;   ///< sampled mono compositions / pushouts
    int corpus_size = 100;     ///< generated ideals per algebra
    int tau_rounds = 20;       ///< random closed-set translate roundtrips
    int kron_rad_depth = 8;    ///< transfinite-radical probe depth
    int kron_dim_bound = 6;    ///< dimension bound for the Kronecker checks
    std::uint64_t seed = 20260823;
};

/// Outcome of one verification suite. `detail` is the machine-readable
/// report (sorted keys); mismatch entries name the algebra, the objects
/// involved and the dimensions on both sides.
struct SuiteResult {
    std::string suite;
    std::string algebra;
    bool passed = false;
    int checked = 0;
    Json detail;
};

/// The suite tokens accepted by `verify`.
std::vector<std::string> suite_names();

/// Dispatch by token; throws std::invalid_argument for unknown tokens or
/// when the suite does not apply to the algebra kind of the spec.
SuiteResult run_suite(const std::string& name, const AlgebraSpec& spec,
                      const SuiteOptions& opts = {});

/// Exactness-axiom shadows: supports of composed inflation defects,
/// pushouts of inflations, composable almost-split-mono pairs, generation
/// idempotence, and the collapse of the fully generated structure.
SuiteResult suite_axioms(const ARQuiver& ar, const SuiteOptions& opts = {});

/// The relative Auslander-Reiten formula on every enumerated structure and
/// every ordered pair of indecomposables.
SuiteResult suite_arformula(const ARQuiver& ar, const SuiteOptions& opts = {});

/// Triangle agreement of the three idempotence predicates (add-form,
/// sampled left, sampled right on the dual) on a deterministic ideal
/// corpus; the radical is reported as a reference (negative) case.
SuiteResult suite_lemma51(const ARQuiver& ar, const SuiteOptions& opts = {});

/// Omega-power collapse: every add-ideal is recovered as the omega-power
/// of the vanishing ideal of the complementary sum of simple functors, and
/// omega-powers of corpus ideals are fp-idempotent. Also records which of
/// the two candidate descriptions of the extremal fp-idempotent subideal
/// (omega-power versus add-ideal of units) coincide.
SuiteResult suite_theorem_d(const ARQuiver& ar, const SuiteOptions& opts = {});

/// For each non-injective M: the one-module structure E_M is maximal, the
/// almost split sequence at M is almost E_M-exact, exactly the sequences
/// starting at M fail E_M-exactness, and the dual sequence is almost
/// exact for the independently computed dual structure.
SuiteResult suite_theorem_c(const ARQuiver& ar, const SuiteOptions& opts = {});

/// Decompose/compose roundtrip on every subset of the indecomposables.
SuiteResult suite_cor41(const ARQuiver& ar, const SuiteOptions& opts = {});

/// For every structure: both projectivity-ideal routes agree, and
/// 1_X in P_E iff 1_{tau X} in I_E for all non-projective X.
SuiteResult suite_prop413(const ARQuiver& ar, const SuiteOptions& opts = {});

/// Translate roundtrips on random closed sets containing the projectives
/// (respectively injectives).
SuiteResult suite_cor414(const ARQuiver& ar, const SuiteOptions& opts = {});

/// The Kronecker dictionary: the five ideal-family closed sets, their
/// invariance under the translate, Euler-form bookkeeping, transfinite
/// radical probes, and the almost exact sequence at the simple
/// preprojective.
SuiteResult suite_kronecker56(const AlgebraSpec& spec, const SuiteOptions& opts = {});

}  // namespace exactlab
