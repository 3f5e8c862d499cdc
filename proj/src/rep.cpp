#include "exactlab/rep.hpp"

#include <stdexcept>

namespace exactlab {

bool Rep::operator==(const Rep& other) const {
    return quiver == other.quiver && dims == other.dims && arrow_maps == other.arrow_maps;
}

bool MorphismRep::operator==(const MorphismRep& other) const {
    return source == other.source && target == other.target && components == other.components;
}

void validate_rep(const Rep& m) {
    if (static_cast<int>(m.dims.size()) != m.quiver.vertex_count)
        throw std::invalid_argument("representation has wrong number of vertex dimensions");
    if (m.arrow_maps.size() != m.quiver.arrows.size())
        throw std::invalid_argument("representation has wrong number of arrow maps");
    for (std::size_t i = 0; i < m.arrow_maps.size(); ++i) {
        const Arrow& a = m.quiver.arrows[i];
        if (m.arrow_maps[i].rows() != m.dims[a.target] || m.arrow_maps[i].cols() != m.dims[a.source])
            throw std::invalid_argument("arrow map " + a.name + " has wrong shape");
    }
    for (int d : m.dims)
        if (d < 0) throw std::invalid_argument("negative vertex dimension");
}

bool is_valid_morphism(const MorphismRep& f) {
    if (!(f.source.quiver == f.target.quiver)) return false;
    if (static_cast<int>(f.components.size()) != f.source.quiver.vertex_count) return false;
    for (int v = 0; v < f.source.quiver.vertex_count; ++v)
        if (f.components[v].rows() != f.target.dims[v] || f.components[v].cols() != f.source.dims[v])
            return false;
    for (std::size_t i = 0; i < f.source.quiver.arrows.size(); ++i) {
        const Arrow& a = f.source.quiver.arrows[i];
        const Matrix lhs = f.components[a.target] * f.source.arrow_maps[i];
        const Matrix rhs = f.target.arrow_maps[i] * f.components[a.source];
        if (!(lhs == rhs)) return false;
    }
    return true;
}

Rep zero_rep(const Quiver& q) {
    Rep m;
    m.quiver = q;
    m.dims.assign(q.vertex_count, 0);
    for (const Arrow& a : q.arrows) {
        (void)a;
        m.arrow_maps.push_back(Matrix::zero(0, 0));
    }
    return m;
}

Rep simple_rep(const Quiver& q, int vertex) {
    if (vertex < 0 || vertex >= q.vertex_count)
        throw std::invalid_argument("simple_rep: vertex out of range");
    Rep m;
    m.quiver = q;
    m.dims.assign(q.vertex_count, 0);
    m.dims[vertex] = 1;
    for (const Arrow& a : q.arrows)
        m.arrow_maps.push_back(Matrix::zero(m.dims[a.target], m.dims[a.source]));
    return m;
}

int total_dim(const Rep& m) {
    int total = 0;
    for (int d : m.dims) total += d;
    return total;
}

bool is_zero_rep(const Rep& m) { return total_dim(m) == 0; }

MorphismRep identity_morphism(const Rep& m) {
    MorphismRep f;
    f.source = m;
    f.target = m;
    for (int d : m.dims) f.components.push_back(Matrix::identity(d));
    return f;
}

MorphismRep zero_morphism(const Rep& source, const Rep& target) {
    MorphismRep f;
    f.source = source;
    f.target = target;
    for (int v = 0; v < source.quiver.vertex_count; ++v)
        f.components.push_back(Matrix::zero(target.dims[v], source.dims[v]));
    return f;
}

MorphismRep compose(const MorphismRep& g, const MorphismRep& f) {
    if (!(f.target == g.source)) throw std::invalid_argument("compose: middle objects differ");
    MorphismRep h;
    h.source = f.source;
    h.target = g.target;
    for (std::size_t v = 0; v < f.components.size(); ++v)
        h.components.push_back(g.components[v] * f.components[v]);
    return h;
}

MorphismRep add(const MorphismRep& f, const MorphismRep& g) {
    MorphismRep h = f;
    for (std::size_t v = 0; v < h.components.size(); ++v)
        h.components[v] = h.components[v] + g.components[v];
    return h;
}

MorphismRep scale(const Rational& c, const MorphismRep& f) {
    MorphismRep h = f;
    for (Matrix& m : h.components) m = m.scaled(c);
    return h;
}

bool is_zero_morphism(const MorphismRep& f) {
    for (const Matrix& m : f.components)
        if (!m.is_zero()) return false;
    return true;
}

bool is_iso(const MorphismRep& f) {
    for (std::size_t v = 0; v < f.components.size(); ++v) {
        const Matrix& m = f.components[v];
        if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    }
    return true;
}

MorphismRep inverse_morphism(const MorphismRep& f) {
    MorphismRep g;
    g.source = f.target;
    g.target = f.source;
    for (const Matrix& m : f.components) {
        auto inv = inverse(m);
        if (!inv) throw std::invalid_argument("inverse_morphism: morphism is not invertible");
        g.components.push_back(*inv);
    }
    return g;
}

DirectSumRep direct_sum(const std::vector<Rep>& summands) {
    if (summands.empty()) throw std::invalid_argument("direct_sum: empty summand list");
    const Quiver& q = summands.front().quiver;
    for (const Rep& m : summands)
        if (!(m.quiver == q)) throw std::invalid_argument("direct_sum: mixed quivers");

    DirectSumRep out;
    out.sum.quiver = q;
    out.sum.dims.assign(q.vertex_count, 0);
    std::vector<std::vector<int>> offsets(summands.size(), std::vector<int>(q.vertex_count, 0));
    for (int v = 0; v < q.vertex_count; ++v)
        for (std::size_t i = 0; i < summands.size(); ++i) {
            offsets[i][v] = out.sum.dims[v];
            out.sum.dims[v] += summands[i].dims[v];
        }
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        Matrix block = Matrix::zero(out.sum.dims[a.target], out.sum.dims[a.source]);
        for (std::size_t i = 0; i < summands.size(); ++i)
            block.paste(offsets[i][a.target], offsets[i][a.source], summands[i].arrow_maps[ai]);
        out.sum.arrow_maps.push_back(block);
    }
    for (std::size_t i = 0; i < summands.size(); ++i) {
        MorphismRep incl = zero_morphism(summands[i], out.sum);
        MorphismRep proj = zero_morphism(out.sum, summands[i]);
        for (int v = 0; v < q.vertex_count; ++v) {
            incl.components[v].paste(offsets[i][v], 0, Matrix::identity(summands[i].dims[v]));
            proj.components[v].paste(0, offsets[i][v], Matrix::identity(summands[i].dims[v]));
        }
        out.inclusions.push_back(incl);
        out.projections.push_back(proj);
    }
    return out;
}

MorphismRep into_sum(const DirectSumRep& target, const std::vector<MorphismRep>& parts) {
    if (parts.size() != target.inclusions.size())
        throw std::invalid_argument("into_sum: wrong number of parts");
    MorphismRep f = compose(target.inclusions[0], parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        f = add(f, compose(target.inclusions[i], parts[i]));
    return f;
}

MorphismRep from_sum(const DirectSumRep& source, const std::vector<MorphismRep>& parts) {
    if (parts.size() != source.projections.size())
        throw std::invalid_argument("from_sum: wrong number of parts");
    MorphismRep f = compose(parts[0], source.projections[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
        f = add(f, compose(parts[i], source.projections[i]));
    return f;
}

MorphismRep sum_of_morphisms(const DirectSumRep& source, const DirectSumRep& target,
                             const std::vector<MorphismRep>& parts) {
    if (parts.size() != source.projections.size() || parts.size() != target.inclusions.size())
        throw std::invalid_argument("sum_of_morphisms: wrong number of parts");
    MorphismRep f = compose(target.inclusions[0], compose(parts[0], source.projections[0]));
    for (std::size_t i = 1; i < parts.size(); ++i)
        f = add(f, compose(target.inclusions[i], compose(parts[i], source.projections[i])));
    return f;
}

namespace {

/// Arrow maps of a subrepresentation in the basis given by per-vertex
/// inclusion matrices (columns are basis vectors of the subspace).
std::vector<Matrix> induced_arrow_maps(const Rep& m, const std::vector<Matrix>& inclusions) {
    std::vector<Matrix> maps;
    for (std::size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
        const Arrow& a = m.quiver.arrows[ai];
        const Matrix image = m.arrow_maps[ai] * inclusions[a.source];
        Matrix induced = Matrix::zero(inclusions[a.target].cols(), image.cols());
        for (int j = 0; j < image.cols(); ++j) {
            std::vector<Rational> column(image.rows());
            for (int r = 0; r < image.rows(); ++r) column[r] = image.at(r, j);
            auto coords = solve(inclusions[a.target], column);
            if (!coords)
                throw std::invalid_argument("subspaces are not closed under the arrow maps");
            for (int r = 0; r < induced.rows(); ++r) induced.at(r, j) = (*coords)[r];
        }
        maps.push_back(induced);
    }
    return maps;
}

}  // namespace

SubRep sub_rep(const Rep& m, const std::vector<Subspace>& spaces) {
    if (static_cast<int>(spaces.size()) != m.quiver.vertex_count)
        throw std::invalid_argument("sub_rep: wrong number of subspaces");
    std::vector<Matrix> inclusions;
    for (int v = 0; v < m.quiver.vertex_count; ++v) {
        if (spaces[v].ambient_dim() != m.dims[v])
            throw std::invalid_argument("sub_rep: subspace has wrong ambient dimension");
        inclusions.push_back(spaces[v].basis().transpose());
    }
    SubRep out;
    out.rep.quiver = m.quiver;
    for (const Matrix& incl : inclusions) out.rep.dims.push_back(static_cast<int>(incl.cols()));
    out.rep.arrow_maps = induced_arrow_maps(m, inclusions);
    out.inclusion.source = out.rep;
    out.inclusion.target = m;
    out.inclusion.components = inclusions;
    return out;
}

QuotRep quotient_rep(const Rep& m, const std::vector<Subspace>& spaces) {
    if (static_cast<int>(spaces.size()) != m.quiver.vertex_count)
        throw std::invalid_argument("quotient_rep: wrong number of subspaces");
    QuotRep out;
    out.rep.quiver = m.quiver;
    std::vector<Matrix> projections, sections;
    for (int v = 0; v < m.quiver.vertex_count; ++v) {
        if (spaces[v].ambient_dim() != m.dims[v])
            throw std::invalid_argument("quotient_rep: subspace has wrong ambient dimension");
        // Quotient coordinates: reduce modulo the subspace, then read off the
        // non-pivot entries.  The matching section sends quotient basis vector
        // j to the standard vector at the j-th non-pivot position.
        std::vector<int> complement;
        const std::vector<std::size_t>& pivots = spaces[v].pivots();
        std::size_t next_pivot = 0;
        for (int c = 0; c < m.dims[v]; ++c) {
            if (next_pivot < pivots.size() && pivots[next_pivot] == static_cast<std::size_t>(c))
                ++next_pivot;
            else
                complement.push_back(c);
        }
        const int qdim = static_cast<int>(complement.size());
        out.rep.dims.push_back(qdim);
        Matrix proj = Matrix::zero(qdim, m.dims[v]);
        for (int c = 0; c < m.dims[v]; ++c) {
            std::vector<Rational> e(m.dims[v], Rational(0));
            e[c] = 1;
            const std::vector<Rational> reduced = spaces[v].reduce(e);
            for (int r = 0; r < qdim; ++r) proj.at(r, c) = reduced[complement[r]];
        }
        Matrix section = Matrix::zero(m.dims[v], qdim);
        for (int r = 0; r < qdim; ++r) section.at(complement[r], r) = 1;
        projections.push_back(proj);
        sections.push_back(section);
    }
    for (std::size_t ai = 0; ai < m.quiver.arrows.size(); ++ai) {
        const Arrow& a = m.quiver.arrows[ai];
        out.rep.arrow_maps.push_back(projections[a.target] * m.arrow_maps[ai] *
                                     sections[a.source]);
    }
    out.projection.source = m;
    out.projection.target = out.rep;
    out.projection.components = projections;
    if (!is_valid_morphism(out.projection))
        throw std::invalid_argument("quotient_rep: subspaces are not closed under the arrow maps");
    return out;
}

std::vector<Subspace> image_subspaces(const MorphismRep& f) {
    std::vector<Subspace> images;
    for (const Matrix& m : f.components)
        images.push_back(Subspace::span(m.transpose(), m.rows()));
    return images;
}

SubRep kernel(const MorphismRep& f) {
    std::vector<Subspace> kernels;
    for (const Matrix& m : f.components)
        kernels.push_back(Subspace::span(nullspace(m), m.cols()));
    return sub_rep(f.source, kernels);
}

QuotRep cokernel(const MorphismRep& f) { return quotient_rep(f.target, image_subspaces(f)); }

PushoutRep pushout(const MorphismRep& f, const MorphismRep& h) {
    if (!(f.source == h.source)) throw std::invalid_argument("pushout: sources differ");
    const DirectSumRep target = direct_sum({f.target, h.target});
    const MorphismRep corner = into_sum(target, {f, scale(Rational(-1), h)});
    const QuotRep quot = cokernel(corner);
    return {quot.rep, compose(quot.projection, target.inclusions[0]),
            compose(quot.projection, target.inclusions[1])};
}

std::vector<Subspace> socle_subspaces(const Rep& m) {
    std::vector<Subspace> socle;
    for (int v = 0; v < m.quiver.vertex_count; ++v) {
        Subspace s = Subspace::full(m.dims[v]);
        for (std::size_t ai = 0; ai < m.quiver.arrows.size(); ++ai)
            if (m.quiver.arrows[ai].source == v)
                s = s.intersect(Subspace::span(nullspace(m.arrow_maps[ai]), m.dims[v]));
        socle.push_back(s);
    }
    return socle;
}

Rep matlis_dual_rep(const Rep& m) {
    Rep d;
    d.quiver = opposite(m.quiver);
    d.dims = m.dims;
    for (const Matrix& a : m.arrow_maps) d.arrow_maps.push_back(a.transpose());
    return d;
}

MorphismRep matlis_dual_morphism(const MorphismRep& f) {
    MorphismRep d;
    d.source = matlis_dual_rep(f.target);
    d.target = matlis_dual_rep(f.source);
    for (const Matrix& m : f.components) d.components.push_back(m.transpose());
    return d;
}

}  // namespace exactlab
