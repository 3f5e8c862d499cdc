#pragma once

#include <string>
#include <vector>

namespace exactlab {

/// An arrow of a finite quiver; vertices are 0-based indices.
struct Arrow {
    std::string name;
    int source = 0;
    int target = 0;

    bool operator==(const Arrow& other) const = default;
};

/// A finite quiver. Two backends are supported downstream: Dynkin quivers of
/// type A/D/E with arbitrary orientation (representation-finite path
/// algebras) and the Kronecker quiver (two parallel arrows 1 ⇉ 2).
struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;

    bool operator==(const Quiver& other) const = default;
};

/// Result of Dynkin recognition on the underlying undirected graph.
struct GraphType {
    bool is_dynkin = false;
    /// "A3", "D4", "E6", ... when Dynkin; otherwise a descriptive label of
    /// what the graph actually is ("cyclic", "multiple edge", "affine or
    /// wider tree", ...), used verbatim in rejection messages.
    std::string label;
};

/// Classifies the underlying graph (orientation-independent).
GraphType classify_graph(const Quiver& q);

/// The Kronecker quiver: vertices {0, 1} with two parallel arrows 0 → 1.
Quiver kronecker_quiver();

/// Linear A_n quiver 0 → 1 → … → n-1 (test and example helper).
Quiver linear_quiver(int n);

/// Reverses all arrows (the quiver of the opposite algebra).
Quiver opposite(const Quiver& q);

/// Vertices sorted sources-first (Kahn's algorithm, stable by index).
/// Throws if the quiver has an oriented cycle.
std::vector<int> topological_order(const Quiver& q);

}  // namespace exactlab
