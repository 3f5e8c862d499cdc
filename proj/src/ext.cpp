#include "exactlab/ext.hpp"

#include <stdexcept>

#include "exactlab/hom.hpp"

namespace exactlab {

namespace {

std::vector<std::size_t> cocycle_offsets(const Rep& X, const Rep& Y) {
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const Arrow& a : X.quiver.arrows) {
        offsets.push_back(total);
        total += static_cast<std::size_t>(Y.dims[a.target]) *
                 static_cast<std::size_t>(X.dims[a.source]);
    }
    offsets.push_back(total);
    return offsets;
}

}  // namespace

std::vector<Matrix> ExtPresentation::blocks_of(const std::vector<Rational>& cocycle) const {
    if (cocycle.size() != arrow_offsets.back())
        throw std::invalid_argument("cocycle vector has wrong length");
    std::vector<Matrix> blocks;
    for (std::size_t ai = 0; ai < X.quiver.arrows.size(); ++ai) {
        const Arrow& a = X.quiver.arrows[ai];
        std::vector<Rational> chunk(cocycle.begin() + arrow_offsets[ai],
                                    cocycle.begin() + arrow_offsets[ai + 1]);
        blocks.push_back(Matrix::from_vector(chunk, Y.dims[a.target], X.dims[a.source]));
    }
    return blocks;
}

std::vector<Rational> ExtPresentation::cocycle_from_blocks(const std::vector<Matrix>& blocks) const {
    std::vector<Rational> out;
    for (const Matrix& b : blocks) {
        const std::vector<Rational> part = b.vectorize();
        out.insert(out.end(), part.begin(), part.end());
    }
    if (out.size() != arrow_offsets.back())
        throw std::invalid_argument("cocycle blocks have wrong shapes");
    return out;
}

std::vector<Rational> ExtPresentation::class_of(const std::vector<Rational>& cocycle) const {
    const std::vector<Rational> reduced = coboundaries.reduce(cocycle);
    std::vector<Rational> cls;
    for (std::size_t c : class_coords) cls.push_back(reduced[c]);
    return cls;
}

std::vector<Rational> ExtPresentation::cocycle_of(const std::vector<Rational>& cls) const {
    if (cls.size() != class_coords.size())
        throw std::invalid_argument("class vector has wrong length");
    std::vector<Rational> cocycle(arrow_offsets.back(), Rational(0));
    for (std::size_t i = 0; i < class_coords.size(); ++i) cocycle[class_coords[i]] = cls[i];
    return cocycle;
}

ExtPresentation ext_space(const Rep& X, const Rep& Y) {
    if (!(X.quiver == Y.quiver)) throw std::invalid_argument("ext_space: mixed quivers");
    ExtPresentation pres;
    pres.X = X;
    pres.Y = Y;
    pres.arrow_offsets = cocycle_offsets(X, Y);
    const std::size_t cocycle_dim = pres.arrow_offsets.back();

    // Image of the coboundary map Phi, one generator per entry of a
    // vertexwise map f_v : X_v -> Y_v.
    std::vector<std::vector<Rational>> image_rows;
    for (int v = 0; v < X.quiver.vertex_count; ++v)
        for (int r = 0; r < Y.dims[v]; ++r)
            for (int c = 0; c < X.dims[v]; ++c) {
                std::vector<Matrix> blocks;
                for (std::size_t ai = 0; ai < X.quiver.arrows.size(); ++ai) {
                    const Arrow& a = X.quiver.arrows[ai];
                    Matrix block = Matrix::zero(Y.dims[a.target], X.dims[a.source]);
                    if (a.source == v)  // (Y_a f)_{i c'} picks up column r of Y_a
                        for (int i = 0; i < Y.dims[a.target]; ++i)
                            block.at(i, c) += Y.arrow_maps[ai].at(i, r);
                    if (a.target == v)  // -(f X_a)_{r c'} picks up row c of X_a
                        for (int j = 0; j < X.dims[a.source]; ++j)
                            block.at(r, j) -= X.arrow_maps[ai].at(c, j);
                    blocks.push_back(block);
                }
                image_rows.push_back(pres.cocycle_from_blocks(blocks));
            }

    Matrix rows(image_rows.size(), cocycle_dim);
    for (std::size_t i = 0; i < image_rows.size(); ++i)
        for (std::size_t j = 0; j < cocycle_dim; ++j) rows.at(i, j) = image_rows[i][j];
    pres.coboundaries = Subspace::span(rows, cocycle_dim);

    const std::vector<std::size_t>& pivots = pres.coboundaries.pivots();
    std::size_t next = 0;
    for (std::size_t c = 0; c < cocycle_dim; ++c) {
        if (next < pivots.size() && pivots[next] == c)
            ++next;
        else
            pres.class_coords.push_back(c);
    }
    return pres;
}

int ext_dim(const Rep& X, const Rep& Y) { return ext_space(X, Y).dim(); }

int euler_form(const Quiver& q, const std::vector<int>& x, const std::vector<int>& y) {
    int form = 0;
    for (int v = 0; v < q.vertex_count; ++v) form += x[v] * y[v];
    for (const Arrow& a : q.arrows) form -= x[a.source] * y[a.target];
    return form;
}

Conflation realize_extension(const ExtPresentation& pres, const std::vector<Rational>& cocycle) {
    const std::vector<Matrix> zeta = pres.blocks_of(cocycle);
    const Rep& X = pres.X;
    const Rep& Y = pres.Y;
    Rep E;
    E.quiver = X.quiver;
    for (int v = 0; v < X.quiver.vertex_count; ++v) E.dims.push_back(Y.dims[v] + X.dims[v]);
    for (std::size_t ai = 0; ai < X.quiver.arrows.size(); ++ai) {
        const Arrow& a = X.quiver.arrows[ai];
        Matrix map = Matrix::zero(E.dims[a.target], E.dims[a.source]);
        map.paste(0, 0, Y.arrow_maps[ai]);
        map.paste(0, Y.dims[a.source], zeta[ai]);
        map.paste(Y.dims[a.target], Y.dims[a.source], X.arrow_maps[ai]);
        E.arrow_maps.push_back(map);
    }
    MorphismRep mono = zero_morphism(Y, E);
    MorphismRep epi = zero_morphism(E, X);
    for (int v = 0; v < X.quiver.vertex_count; ++v) {
        mono.components[v].paste(0, 0, Matrix::identity(Y.dims[v]));
        epi.components[v].paste(0, Y.dims[v], Matrix::identity(X.dims[v]));
    }
    return {mono, epi};
}

std::vector<Rational> conflation_cocycle(const ExtPresentation& pres, const Conflation& c) {
    if (!(c.inflation.source == pres.Y) || !(c.deflation.target == pres.X))
        throw std::invalid_argument("conflation endpoints do not match the Ext presentation");
    if (!(c.inflation.target == c.deflation.source))
        throw std::invalid_argument("conflation middle objects differ");
    const Rep& E = c.inflation.target;
    const int n = E.quiver.vertex_count;

    // Deterministic vertexwise splittings: s_v with p_v s_v = id (canonical
    // particular solutions) and r_v with r_v i_v = id.
    std::vector<Matrix> s(n), r(n);
    for (int v = 0; v < n; ++v) {
        const Matrix& p = c.deflation.components[v];
        const Matrix& i = c.inflation.components[v];
        Matrix sv = Matrix::zero(E.dims[v], pres.X.dims[v]);
        for (int j = 0; j < pres.X.dims[v]; ++j) {
            std::vector<Rational> e(p.rows(), Rational(0));
            e[j] = 1;
            auto col = solve(p, e);
            if (!col) throw std::invalid_argument("deflation is not epi at a vertex");
            for (int k = 0; k < static_cast<int>(col->size()); ++k) sv.at(k, j) = (*col)[k];
        }
        s[v] = sv;
        const Matrix it = i.transpose();
        Matrix rv = Matrix::zero(pres.Y.dims[v], E.dims[v]);
        for (int j = 0; j < pres.Y.dims[v]; ++j) {
            std::vector<Rational> e(it.rows(), Rational(0));
            e[j] = 1;
            auto row = solve(it, e);
            if (!row) throw std::invalid_argument("inflation is not mono at a vertex");
            for (int k = 0; k < static_cast<int>(row->size()); ++k) rv.at(j, k) = (*row)[k];
        }
        r[v] = rv;
    }

    std::vector<Matrix> blocks;
    for (std::size_t ai = 0; ai < E.quiver.arrows.size(); ++ai) {
        const Arrow& a = E.quiver.arrows[ai];
        const Matrix drift =
            E.arrow_maps[ai] * s[a.source] - s[a.target] * pres.X.arrow_maps[ai];
        blocks.push_back(r[a.target] * drift);
    }
    return pres.cocycle_from_blocks(blocks);
}

std::vector<Rational> extension_class(const ExtPresentation& pres, const Conflation& c) {
    return pres.class_of(conflation_cocycle(pres, c));
}

std::vector<Rational> pushforward_cocycle(const ExtPresentation& from, const ExtPresentation& to,
                                          const MorphismRep& phi,
                                          const std::vector<Rational>& cocycle) {
    if (!(phi.source == from.Y) || !(phi.target == to.Y) || !(from.X == to.X))
        throw std::invalid_argument("pushforward endpoints do not match the presentations");
    const std::vector<Matrix> blocks = from.blocks_of(cocycle);
    std::vector<Matrix> pushed;
    for (std::size_t ai = 0; ai < from.X.quiver.arrows.size(); ++ai)
        pushed.push_back(phi.components[from.X.quiver.arrows[ai].target] * blocks[ai]);
    return to.cocycle_from_blocks(pushed);
}

std::vector<Rational> pushforward_class(const ExtPresentation& from, const ExtPresentation& to,
                                        const MorphismRep& phi, const std::vector<Rational>& cls) {
    return to.class_of(pushforward_cocycle(from, to, phi, from.cocycle_of(cls)));
}

Matrix pushforward_matrix(const ExtPresentation& from, const ExtPresentation& to,
                          const MorphismRep& phi) {
    Matrix out(to.dim(), from.dim());
    for (int j = 0; j < from.dim(); ++j) {
        std::vector<Rational> cls(from.dim(), Rational(0));
        cls[j] = 1;
        const std::vector<Rational> image = pushforward_class(from, to, phi, cls);
        for (int i = 0; i < to.dim(); ++i) out.at(i, j) = image[i];
    }
    return out;
}

}  // namespace exactlab
