#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactlab/hom.hpp"
#include "exactlab/rep.hpp"

namespace exactlab {

/// An indecomposable module discovered by knitting, with its position in the
/// projective/injective landscape. Ids are "m0", "m1", ... in discovery
/// order: projectives first (by vertex), then each mesh cokernel.
struct Indec {
    std::string id;
    Rep rep;
    bool is_projective = false;
    bool is_injective = false;
    int projective_vertex = -1;  ///< v when the module is P(v), else -1
    int injective_vertex = -1;   ///< v when the module is I(v), else -1
};

/// An irreducible map in the AR quiver, between indecomposables by index.
struct ARArrowInfo {
    int source = -1;
    int target = -1;
    MorphismRep map;
};

/// An almost split sequence 0 -> start -> (+) middle -> end -> 0, with
/// end = tau^{-1}(start).
struct ARSequence {
    int start = -1;
    std::vector<int> middle;  ///< summand indices in mesh order
    int end = -1;
    Conflation conflation;
};

/// The Auslander-Reiten quiver of a representation-finite (Dynkin) path
/// algebra, built by knitting: projectives are constructed from paths, and
/// each non-injective module is completed to its mesh
///   0 -> X -> (+) E_i -> tau^{-1}(X) -> 0
/// once all irreducible maps out of X are known. The construction is fully
/// deterministic (ready modules are processed in lexicographic dim-vector
/// order), so module ids and all derived reports are reproducible.
class ARQuiver {
  public:
    /// Knits the AR quiver; throws std::invalid_argument unless the
    /// underlying graph is Dynkin of type A/D/E. Validates the count of
    /// indecomposables against the number of positive roots of the type.
    static ARQuiver knit(const Quiver& q);

    const Quiver& quiver() const { return quiver_; }
    const std::string& type_label() const { return type_label_; }
    const std::vector<Indec>& indecs() const { return indecs_; }
    const Indec& indec(int i) const { return indecs_.at(i); }
    int count() const { return static_cast<int>(indecs_.size()); }

    const std::vector<ARArrowInfo>& arrows() const { return arrows_; }
    const std::vector<ARSequence>& sequences() const { return sequences_; }

    /// Index lookup by id ("m3"); throws std::invalid_argument if unknown.
    int index_of(const std::string& id) const;

    /// Index of the indecomposable with the given dim vector, if any.
    /// (Dim vectors are complete invariants here: indecomposables
    /// correspond to positive roots.)
    std::optional<int> find_by_dims(const std::vector<int>& dims) const;

    std::optional<int> tau(int i) const;          ///< for non-projectives
    std::optional<int> tau_inverse(int i) const;  ///< for non-injectives

    int projective_at(int vertex) const;
    int injective_at(int vertex) const;

    /// Indices of non-injective indecomposables, ascending.
    std::vector<int> non_injectives() const;

    /// The sequence with the given start (non-injective) / end
    /// (non-projective) module, if any.
    std::optional<int> sequence_starting_at(int i) const;
    std::optional<int> sequence_ending_at(int i) const;

    /// Cached canonical basis of Hom(indec i, indec j).
    const std::vector<MorphismRep>& hom(int i, int j) const;
    int hom_dim(int i, int j) const;

    /// The unique indecomposable isomorphic to m, with an explicit
    /// isomorphism (dim-vector filter, then search of the hom basis for an
    /// invertible element). Throws if m is decomposable or foreign.
    std::pair<int, MorphismRep> classify(const Rep& m) const;

    /// Decomposition of an arbitrary module over this algebra into
    /// indecomposables: (index, multiplicity) pairs, ascending by index.
    std::vector<std::pair<int, int>> decompose(const Rep& m) const;

    /// The source map of the mesh at i (non-injective), or the quotient by
    /// the socle (injective): in both cases a left almost split map.
    MorphismRep left_almost_split_map(int i) const;

  private:
    ARQuiver() = default;

    Quiver quiver_;
    std::string type_label_;
    std::vector<Indec> indecs_;
    std::vector<ARArrowInfo> arrows_;
    std::vector<ARSequence> sequences_;
    std::vector<int> projective_of_vertex_;
    std::vector<int> injective_of_vertex_;
    std::map<std::vector<int>, int> index_by_dims_;
    std::vector<std::optional<int>> tau_;
    std::vector<std::optional<int>> tau_inverse_;
    std::vector<std::optional<int>> sequence_of_start_;
    std::vector<std::optional<int>> sequence_of_end_;

    // unique_ptr keeps the class movable despite the mutex
    mutable std::unique_ptr<std::mutex> hom_cache_mutex_ = std::make_unique<std::mutex>();
    mutable std::map<std::pair<int, int>, std::vector<MorphismRep>> hom_cache_;
};

/// Expected number of indecomposables (positive roots) for a Dynkin label
/// like "A5", "D4", "E8".
int positive_root_count(const std::string& type_label);

/// The projective P(v): path spaces starting at v. Works for any acyclic
/// quiver; for trees all dimensions are 0 or 1.
Rep projective_rep(const Quiver& q, int vertex);

/// The injective I(v), built as the dual of the opposite projective.
Rep injective_rep(const Quiver& q, int vertex);

}  // namespace exactlab
