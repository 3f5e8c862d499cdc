#include "exactlab/hom.hpp"

#include <stdexcept>

namespace exactlab {

namespace {

/// Offset of component v inside the vectorization of Hom(X, Y).
std::vector<std::size_t> component_offsets(const Rep& X, const Rep& Y) {
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (int v = 0; v < X.quiver.vertex_count; ++v) {
        offsets.push_back(total);
        total += static_cast<std::size_t>(Y.dims[v]) * static_cast<std::size_t>(X.dims[v]);
    }
    offsets.push_back(total);
    return offsets;
}

}  // namespace

std::vector<MorphismRep> hom_basis(const Rep& X, const Rep& Y) {
    if (!(X.quiver == Y.quiver)) throw std::invalid_argument("hom_basis: mixed quivers");
    const std::vector<std::size_t> offsets = component_offsets(X, Y);
    const std::size_t unknowns = offsets.back();

    std::size_t equations = 0;
    for (const Arrow& a : X.quiver.arrows)
        equations += static_cast<std::size_t>(Y.dims[a.target]) *
                     static_cast<std::size_t>(X.dims[a.source]);

    // One row per entry of f_{t(a)} X_a - Y_a f_{s(a)} = 0.
    Matrix system(equations, unknowns);
    std::size_t eq = 0;
    for (std::size_t ai = 0; ai < X.quiver.arrows.size(); ++ai) {
        const Arrow& a = X.quiver.arrows[ai];
        const int ds = X.dims[a.source], dt = Y.dims[a.target];
        const Matrix& Xa = X.arrow_maps[ai];
        const Matrix& Ya = Y.arrow_maps[ai];
        for (int r = 0; r < dt; ++r)
            for (int c = 0; c < ds; ++c) {
                for (int k = 0; k < X.dims[a.target]; ++k)
                    system.at(eq, offsets[a.target] + r * X.dims[a.target] + k) += Xa.at(k, c);
                for (int k = 0; k < Y.dims[a.source]; ++k)
                    system.at(eq, offsets[a.source] + k * X.dims[a.source] + c) -= Ya.at(r, k);
                ++eq;
            }
    }

    const Matrix solutions = nullspace(system);
    std::vector<MorphismRep> basis;
    for (std::size_t i = 0; i < solutions.rows(); ++i)
        basis.push_back(morphism_from_vector(X, Y, solutions.row(i)));
    return basis;
}

int hom_dim(const Rep& X, const Rep& Y) { return static_cast<int>(hom_basis(X, Y).size()); }

std::vector<Rational> morphism_vector(const MorphismRep& f) {
    std::vector<Rational> out;
    for (const Matrix& c : f.components) {
        const std::vector<Rational> part = c.vectorize();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

MorphismRep morphism_from_vector(const Rep& X, const Rep& Y, const std::vector<Rational>& v) {
    MorphismRep f;
    f.source = X;
    f.target = Y;
    std::size_t pos = 0;
    for (int vtx = 0; vtx < X.quiver.vertex_count; ++vtx) {
        const std::size_t entries =
            static_cast<std::size_t>(Y.dims[vtx]) * static_cast<std::size_t>(X.dims[vtx]);
        std::vector<Rational> chunk(v.begin() + pos, v.begin() + pos + entries);
        f.components.push_back(Matrix::from_vector(chunk, Y.dims[vtx], X.dims[vtx]));
        pos += entries;
    }
    if (pos != v.size()) throw std::invalid_argument("morphism_from_vector: wrong vector length");
    return f;
}

std::vector<Rational> coordinates_in_basis(const MorphismRep& f,
                                           const std::vector<MorphismRep>& basis) {
    if (basis.empty()) {
        if (!is_zero_morphism(f))
            throw std::invalid_argument("coordinates_in_basis: morphism outside the span");
        return {};
    }
    const std::vector<Rational> target = morphism_vector(f);
    Matrix columns(target.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::vector<Rational> col = morphism_vector(basis[j]);
        for (std::size_t i = 0; i < col.size(); ++i) columns.at(i, j) = col[i];
    }
    auto coords = solve(columns, target);
    if (!coords) throw std::invalid_argument("coordinates_in_basis: morphism outside the span");
    return *coords;
}

Matrix precomposition_matrix(const std::vector<MorphismRep>& basis_from,
                             const std::vector<MorphismRep>& basis_to, const MorphismRep& f) {
    Matrix out(basis_to.size(), basis_from.size());
    for (std::size_t j = 0; j < basis_from.size(); ++j) {
        const std::vector<Rational> coords = coordinates_in_basis(compose(basis_from[j], f), basis_to);
        for (std::size_t i = 0; i < coords.size(); ++i) out.at(i, j) = coords[i];
    }
    return out;
}

Matrix postcomposition_matrix(const std::vector<MorphismRep>& basis_from,
                              const std::vector<MorphismRep>& basis_to, const MorphismRep& f) {
    Matrix out(basis_to.size(), basis_from.size());
    for (std::size_t j = 0; j < basis_from.size(); ++j) {
        const std::vector<Rational> coords = coordinates_in_basis(compose(f, basis_from[j]), basis_to);
        for (std::size_t i = 0; i < coords.size(); ++i) out.at(i, j) = coords[i];
    }
    return out;
}

bool is_mono(const MorphismRep& f) {
    for (const Matrix& m : f.components)
        if (rank(m) != m.cols()) return false;
    return true;
}

bool is_epi(const MorphismRep& f) {
    for (const Matrix& m : f.components)
        if (rank(m) != m.rows()) return false;
    return true;
}

bool is_kernel_cokernel_pair(const MorphismRep& i, const MorphismRep& p) {
    if (!is_valid_morphism(i) || !is_valid_morphism(p)) return false;
    if (!(i.target == p.source)) return false;
    if (!is_mono(i) || !is_epi(p)) return false;
    for (std::size_t v = 0; v < i.components.size(); ++v) {
        const Subspace image = Subspace::span(i.components[v].transpose(), i.components[v].rows());
        const Subspace ker =
            Subspace::span(nullspace(p.components[v]), p.components[v].cols());
        if (!(image == ker)) return false;
    }
    return true;
}

Rational total_trace(const MorphismRep& endo) {
    Rational t = 0;
    for (const Matrix& m : endo.components)
        for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

Subspace end_radical_subspace(const Rep& M, const std::vector<MorphismRep>& basis) {
    const std::size_t n = basis.size();
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram.at(i, j) = total_trace(compose(basis[i], basis[j]));
    return Subspace::span(nullspace(gram), n);
}

bool is_indecomposable(const Rep& M) {
    if (is_zero_rep(M))
        throw std::invalid_argument("is_indecomposable: the zero representation is rejected");
    const std::vector<MorphismRep> basis = hom_basis(M, M);
    const Subspace radical = end_radical_subspace(M, basis);
    return basis.size() - radical.dim() == 1;
}

namespace {

/// Coefficients alpha with sum_j alpha_j spanning[j] = rhs, if rhs lies in
/// the span of `spanning` (which need not be independent).
std::optional<std::vector<Rational>> combination_for(const std::vector<MorphismRep>& spanning,
                                                     const MorphismRep& rhs) {
    if (spanning.empty()) {
        if (is_zero_morphism(rhs)) return std::vector<Rational>{};
        return std::nullopt;
    }
    const std::vector<Rational> target = morphism_vector(rhs);
    Matrix columns(target.size(), spanning.size());
    for (std::size_t j = 0; j < spanning.size(); ++j) {
        const std::vector<Rational> col = morphism_vector(spanning[j]);
        for (std::size_t i = 0; i < col.size(); ++i) columns.at(i, j) = col[i];
    }
    return solve(columns, target);
}

}  // namespace

std::optional<MorphismRep> retraction(const MorphismRep& f) {
    // r o f = id is linear in r; solve for coefficients of r in a hom basis.
    const std::vector<MorphismRep> basis = hom_basis(f.target, f.source);
    std::vector<MorphismRep> composed;
    for (const MorphismRep& b : basis) composed.push_back(compose(b, f));
    auto coords = combination_for(composed, identity_morphism(f.source));
    if (!coords) return std::nullopt;
    MorphismRep r = zero_morphism(f.target, f.source);
    for (std::size_t j = 0; j < basis.size(); ++j) r = add(r, scale((*coords)[j], basis[j]));
    return r;
}

std::optional<MorphismRep> section(const MorphismRep& p) {
    const std::vector<MorphismRep> basis = hom_basis(p.target, p.source);
    std::vector<MorphismRep> composed;
    for (const MorphismRep& b : basis) composed.push_back(compose(p, b));
    auto coords = combination_for(composed, identity_morphism(p.target));
    if (!coords) return std::nullopt;
    MorphismRep s = zero_morphism(p.target, p.source);
    for (std::size_t j = 0; j < basis.size(); ++j) s = add(s, scale((*coords)[j], basis[j]));
    return s;
}

std::vector<int> decompose_against(const Rep& M, const std::vector<Rep>& candidates) {
    std::vector<int> multiplicities(candidates.size(), 0);
    Rep rest = M;
    while (!is_zero_rep(rest)) {
        bool split_someone = false;
        for (std::size_t c = 0; c < candidates.size() && !split_someone; ++c) {
            const Rep& indec = candidates[c];
            if (is_zero_rep(indec)) continue;
            const std::vector<MorphismRep> to_indec = hom_basis(rest, indec);
            const std::vector<MorphismRep> from_indec = hom_basis(indec, rest);
            for (const MorphismRep& r : to_indec) {
                for (const MorphismRep& s : from_indec) {
                    const MorphismRep u = compose(r, s);
                    if (!is_iso(u)) continue;
                    // e = s u^{-1} r is an idempotent with image isomorphic to
                    // the candidate; the complement is its kernel.
                    const MorphismRep e = compose(s, compose(inverse_morphism(u), r));
                    ++multiplicities[c];
                    rest = kernel(e).rep;
                    split_someone = true;
                    break;
                }
                if (split_someone) break;
            }
        }
        if (!split_someone)
            throw std::invalid_argument(
                "decompose_against: no candidate is a summand of the remaining module");
    }
    return multiplicities;
}

}  // namespace exactlab
