#include "exactlab/fp_functor.hpp"

#include "exactlab/matrix.hpp"
#include "exactlab/subspace.hpp"

namespace exactlab {

int eval_dim(const FpFunctor& F, const Rep& M) {
    const std::vector<MorphismRep> from = hom_basis(F.presenter.target, M);
    const std::vector<MorphismRep> to = hom_basis(F.presenter.source, M);
    if (to.empty()) return 0;
    const Matrix m = precomposition_matrix(from, to, F.presenter);
    return static_cast<int>(to.size()) - static_cast<int>(rank(m));
}

std::vector<int> support(const FpFunctor& F, const ARQuiver& ar) {
    std::vector<int> out;
    for (int i = 0; i < ar.count(); ++i)
        if (eval_dim(F, ar.indec(i).rep) != 0) out.push_back(i);
    return out;
}

bool is_zero_functor(const FpFunctor& F, const ARQuiver& ar) { return support(F, ar).empty(); }

FpFunctor simple_functor(const ARQuiver& ar, int i) { return {ar.left_almost_split_map(i)}; }

int simple_multiplicity(const FpFunctor& F, const ARQuiver& ar, int i) {
    return eval_dim(F, ar.indec(i).rep);
}

FpFunctor functor_direct_sum(const Quiver& q, const std::vector<FpFunctor>& fs) {
    if (fs.empty()) return {identity_morphism(zero_rep(q))};
    std::vector<Rep> sources, targets;
    std::vector<MorphismRep> presenters;
    for (const FpFunctor& f : fs) {
        sources.push_back(f.presenter.source);
        targets.push_back(f.presenter.target);
        presenters.push_back(f.presenter);
    }
    return {sum_of_morphisms(direct_sum(sources), direct_sum(targets), presenters)};
}

bool functor_kills(const FpFunctor& F, const MorphismRep& phi) {
    const Rep& A = F.presenter.source;
    const Rep& B = F.presenter.target;
    const Rep& X = phi.source;
    const Rep& Y = phi.target;

    const std::vector<MorphismRep> hom_AX = hom_basis(A, X);
    if (hom_AX.empty()) return true;
    const std::vector<MorphismRep> hom_BY = hom_basis(B, Y);

    // Image of Hom(f, Y) inside the vectorized Hom(A, Y) coordinate space.
    const std::size_t ambient = morphism_vector(zero_morphism(A, Y)).size();
    Matrix gens(hom_BY.size(), ambient);
    for (std::size_t i = 0; i < hom_BY.size(); ++i) {
        const std::vector<Rational> v = morphism_vector(compose(hom_BY[i], F.presenter));
        for (std::size_t j = 0; j < ambient; ++j) gens.at(i, j) = v[j];
    }
    const Subspace image = Subspace::span(gens, ambient);

    for (const MorphismRep& h : hom_AX)
        if (!image.contains(morphism_vector(compose(phi, h)))) return false;
    return true;
}

}  // namespace exactlab
