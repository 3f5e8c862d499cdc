#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/exact_structure.hpp"
#include "exactlab/ideal.hpp"
#include "exactlab/kronecker.hpp"
#include "exactlab/rep.hpp"

namespace exactlab {

/// nlohmann::json with the default (lexicographically sorted) key order,
/// matching the reproducible-artifact requirement. Rational entries are
/// serialized as strings ("-1/2") so artifacts stay exact.
using Json = nlohmann::json;

Json json_of_matrix(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"dims": [...], "maps": {"<arrow name>": matrix, ...}}
Json json_of_rep(const Rep& rep);
Rep rep_from_json(const Quiver& q, const Json& j);

/// List of {"id", "dims", "projective", "injective", "tau"} entries, in id
/// order; "tau" is null for projectives.
Json json_of_indecs(const ARQuiver& ar);

/// Sorted id list ["m0", "m3", ...] of a closed set / structure value.
Json json_of_closed_set(const ARQuiver& ar, const std::vector<int>& closed_set);

Json json_of_structure(const ARQuiver& ar, const ExactStructure& e);

/// {"pair:(mi,mj)": basis matrix} over the nonzero entries of the ideal.
Json json_of_ideal(const Ideal& ideal);

/// {"finite": [...], "prufer": [...], "adic": [...], "generic": bool}
/// (keys emitted in sorted order).
Json json_of_kclosed(const KClosedSet& set);

/// Schema: {"start": rep, "middle": rep, "end": rep,
///          "inflation": [matrix per vertex], "deflation": [matrix per vertex]}.
/// Throws std::invalid_argument unless the data is a kernel-cokernel pair.
Conflation conflation_from_json(const Quiver& q, const Json& j);
Json json_of_conflation(const Conflation& c);

/// GraphViz DOT of the AR quiver: nodes labelled by id and dim vector,
/// solid irreducible-map arrows, dashed arrows to the AR translate.
std::string ar_quiver_dot(const ARQuiver& ar);

}  // namespace exactlab
