#include "exactlab/ideal.hpp"

#include <random>
#include <stdexcept>
#include <utility>

namespace exactlab {

namespace {

Matrix stack_rows(const std::vector<std::vector<Rational>>& rows, std::size_t width) {
    Matrix m(rows.size(), width);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < width; ++j) m.at(i, j) = rows[i][j];
    return m;
}

/// Matrix of v |-> v - proj_S(v); the kernel is exactly S, so R v = 0 is a
/// linear membership test usable inside larger systems.
Matrix reduction_matrix(const Subspace& S) {
    const std::size_t m = S.ambient_dim();
    Matrix R(m, m);
    for (std::size_t c = 0; c < m; ++c) {
        std::vector<Rational> e(m, Rational(0));
        e[c] = 1;
        const std::vector<Rational> r = S.reduce(e);
        for (std::size_t i = 0; i < m; ++i) R.at(i, c) = r[i];
    }
    return R;
}

MorphismRep combination(const Rep& X, const Rep& Y, const std::vector<MorphismRep>& basis,
                        const std::vector<Rational>& coeffs) {
    MorphismRep out = zero_morphism(X, Y);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs[k] != 0) out = add(out, scale(coeffs[k], basis[k]));
    return out;
}

/// Appends the span of v to S; returns whether S grew.
bool absorb(Subspace& S, const std::vector<Rational>& v) {
    if (S.contains(v)) return false;
    Matrix row(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) row.at(0, j) = v[j];
    S = S.sum(Subspace::span(row, v.size()));
    return true;
}

}  // namespace

Ideal::Ideal(const ARQuiver& ar) : ar_(&ar) {
    const int n = ar.count();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            spaces_.push_back(Subspace::zero(static_cast<std::size_t>(ar.hom_dim(i, j))));
}

const Subspace& Ideal::at(int i, int j) const {
    return spaces_.at(static_cast<std::size_t>(i) * ar_->count() + j);
}

void Ideal::set(int i, int j, Subspace s) {
    spaces_.at(static_cast<std::size_t>(i) * ar_->count() + j) = std::move(s);
}

int Ideal::total_dim() const {
    int total = 0;
    for (const Subspace& s : spaces_) total += static_cast<int>(s.dim());
    return total;
}

bool Ideal::operator==(const Ideal& other) const {
    if (ar_ != other.ar_) throw std::invalid_argument("comparing ideals over different algebras");
    return spaces_ == other.spaces_;
}

bool Ideal::subset_of(const Ideal& other) const {
    if (ar_ != other.ar_) throw std::invalid_argument("comparing ideals over different algebras");
    for (std::size_t k = 0; k < spaces_.size(); ++k)
        if (!other.spaces_[k].contains(spaces_[k])) return false;
    return true;
}

bool Ideal::contains_coords(int i, int j, const std::vector<Rational>& coords) const {
    return at(i, j).contains(coords);
}

bool Ideal::contains_identity(int i) const {
    const std::vector<Rational> coords =
        coordinates_in_basis(identity_morphism(ar_->indec(i).rep), ar_->hom(i, i));
    return contains_coords(i, i, coords);
}

std::vector<int> Ideal::unit_objects() const {
    std::vector<int> out;
    for (int i = 0; i < count(); ++i)
        if (contains_identity(i)) out.push_back(i);
    return out;
}

std::vector<MorphismRep> Ideal::basis_morphisms(int i, int j) const {
    const std::vector<MorphismRep>& basis = ar_->hom(i, j);
    const Matrix& rows = at(i, j).basis();
    std::vector<MorphismRep> out;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::vector<Rational> coeffs;
        for (std::size_t c = 0; c < rows.cols(); ++c) coeffs.push_back(rows.at(r, c));
        out.push_back(combination(ar_->indec(i).rep, ar_->indec(j).rep, basis, coeffs));
    }
    return out;
}

Ideal zero_ideal(const ARQuiver& ar) { return Ideal(ar); }

Ideal hom_ideal(const ARQuiver& ar) {
    Ideal out(ar);
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j)
            out.set(i, j, Subspace::full(static_cast<std::size_t>(ar.hom_dim(i, j))));
    return out;
}

Ideal radical_ideal(const ARQuiver& ar) {
    Ideal out = hom_ideal(ar);
    for (int i = 0; i < ar.count(); ++i)
        out.set(i, i, end_radical_subspace(ar.indec(i).rep, ar.hom(i, i)));
    return out;
}

Ideal ideal_from_add(const ARQuiver& ar, const std::vector<int>& unit_objects) {
    Ideal out(ar);
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j) {
            const std::size_t d = static_cast<std::size_t>(ar.hom_dim(i, j));
            if (d == 0) continue;
            std::vector<std::vector<Rational>> rows;
            for (int u : unit_objects)
                for (const MorphismRep& a : ar.hom(i, u))
                    for (const MorphismRep& b : ar.hom(u, j))
                        rows.push_back(coordinates_in_basis(compose(b, a), ar.hom(i, j)));
            out.set(i, j, Subspace::span(stack_rows(rows, d), d));
        }
    return out;
}

Ideal ideal_generate(const ARQuiver& ar, const std::vector<MorphismRep>& generators) {
    const int n = ar.count();
    Ideal out(ar);

    // Sandwich components of the generators through every indecomposable pair.
    for (const MorphismRep& g : generators) {
        if (!(g.source.quiver == ar.quiver()))
            throw std::invalid_argument("generator over a different quiver");
        for (int i = 0; i < n; ++i) {
            const std::vector<MorphismRep> into = hom_basis(ar.indec(i).rep, g.source);
            if (into.empty()) continue;
            for (int j = 0; j < n; ++j) {
                if (ar.hom_dim(i, j) == 0) continue;
                const std::vector<MorphismRep> outof = hom_basis(g.target, ar.indec(j).rep);
                Subspace s = out.at(i, j);
                for (const MorphismRep& a : into)
                    for (const MorphismRep& b : outof)
                        absorb(s, coordinates_in_basis(compose(b, compose(g, a)), ar.hom(i, j)));
                out.set(i, j, s);
            }
        }
    }

    // Saturate under two-sided composition with the indecomposable homs.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (out.at(i, j).is_zero()) continue;
                for (const MorphismRep& f : out.basis_morphisms(i, j)) {
                    for (int k = 0; k < n; ++k) {
                        if (ar.hom_dim(i, k) != 0)
                            for (const MorphismRep& b : ar.hom(j, k)) {
                                Subspace s = out.at(i, k);
                                if (absorb(s, coordinates_in_basis(compose(b, f), ar.hom(i, k)))) {
                                    out.set(i, k, s);
                                    changed = true;
                                }
                            }
                        if (ar.hom_dim(k, j) != 0)
                            for (const MorphismRep& a : ar.hom(k, i)) {
                                Subspace s = out.at(k, j);
                                if (absorb(s, coordinates_in_basis(compose(f, a), ar.hom(k, j)))) {
                                    out.set(k, j, s);
                                    changed = true;
                                }
                            }
                    }
                }
            }
    }
    return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    if (&a.ar() != &b.ar()) throw std::invalid_argument("ideal_sum: different algebras");
    Ideal out(a.ar());
    for (int i = 0; i < a.count(); ++i)
        for (int j = 0; j < a.count(); ++j) out.set(i, j, a.at(i, j).sum(b.at(i, j)));
    return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    Ideal out(a.ar());
    for (int i = 0; i < a.count(); ++i)
        for (int j = 0; j < a.count(); ++j) out.set(i, j, a.at(i, j).intersect(b.at(i, j)));
    return out;
}

Ideal ideal_product(const Ideal& outer, const Ideal& inner) {
    const ARQuiver& ar = inner.ar();
    Ideal out(ar);
    const int n = ar.count();
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<MorphismRep>> inner_basis;
        for (int k = 0; k < n; ++k) inner_basis.push_back(inner.basis_morphisms(i, k));
        for (int j = 0; j < n; ++j) {
            const std::size_t d = static_cast<std::size_t>(ar.hom_dim(i, j));
            if (d == 0) continue;
            std::vector<std::vector<Rational>> rows;
            for (int k = 0; k < n; ++k)
                for (const MorphismRep& f : inner_basis[k])
                    for (const MorphismRep& g : outer.basis_morphisms(k, j))
                        rows.push_back(coordinates_in_basis(compose(g, f), ar.hom(i, j)));
            out.set(i, j, Subspace::span(stack_rows(rows, d), d));
        }
    }
    return out;
}

Ideal ideal_power(const Ideal& ideal, int n) {
    if (n < 1) throw std::invalid_argument("ideal_power: exponent must be >= 1");
    Ideal out = ideal;
    for (int k = 1; k < n; ++k) out = ideal_product(out, ideal);
    return out;
}

Ideal omega_power(const Ideal& ideal) {
    const int bound = hom_ideal(ideal.ar()).total_dim() + 2;
    Ideal prev = ideal;
    for (int step = 0; step < bound; ++step) {
        Ideal next = ideal_product(prev, ideal);
        if (next == prev) return prev;
        prev = std::move(next);
    }
    throw std::logic_error("omega_power: power chain failed to stabilize");
}

Ideal ordinal_power(const Ideal& ideal, const OrdinalExpr& e) {
    if (e.omega_coeff < 0 || e.finite_part < 0)
        throw std::invalid_argument("ordinal_power: negative exponent");
    if (e.omega_coeff == 0) return ideal_power(ideal, e.finite_part);
    Ideal out = ideal;
    for (int q = 0; q < e.omega_coeff; ++q) out = omega_power(out);
    return ideal_power(out, e.finite_part + 1);
}

Subspace ideal_value_at(const Ideal& ideal, const Rep& X, const Rep& Y) {
    const ARQuiver& ar = ideal.ar();
    const std::vector<MorphismRep> basis = hom_basis(X, Y);
    const std::size_t d = basis.size();
    if (d == 0) return Subspace::zero(0);

    std::vector<std::vector<Rational>> constraints;
    for (int i = 0; i < ar.count(); ++i) {
        const std::vector<MorphismRep> into = hom_basis(ar.indec(i).rep, X);
        if (into.empty()) continue;
        for (int j = 0; j < ar.count(); ++j) {
            const std::size_t m = static_cast<std::size_t>(ar.hom_dim(i, j));
            if (m == 0 || ideal.at(i, j).is_full()) continue;
            const std::vector<MorphismRep> outof = hom_basis(Y, ar.indec(j).rep);
            if (outof.empty()) continue;
            const Matrix R = reduction_matrix(ideal.at(i, j));
            for (const MorphismRep& a : into)
                for (const MorphismRep& b : outof) {
                    // T : Hom(X, Y) -> Hom(M_i, M_j), phi |-> b o phi o a.
                    Matrix T(m, d);
                    for (std::size_t c = 0; c < d; ++c) {
                        const std::vector<Rational> col = coordinates_in_basis(
                            compose(b, compose(basis[c], a)), ar.hom(i, j));
                        for (std::size_t r = 0; r < m; ++r) T.at(r, c) = col[r];
                    }
                    const Matrix C = R * T;
                    for (std::size_t r = 0; r < m; ++r) constraints.push_back(C.row(r));
                }
        }
    }
    if (constraints.empty()) return Subspace::full(d);
    return Subspace::span(nullspace(stack_rows(constraints, d)), d);
}

bool ideal_contains(const Ideal& ideal, const MorphismRep& phi) {
    const ARQuiver& ar = ideal.ar();
    for (int i = 0; i < ar.count(); ++i) {
        const std::vector<MorphismRep> into = hom_basis(ar.indec(i).rep, phi.source);
        if (into.empty()) continue;
        for (int j = 0; j < ar.count(); ++j) {
            if (ar.hom_dim(i, j) == 0) continue;
            for (const MorphismRep& a : into)
                for (const MorphismRep& b : hom_basis(phi.target, ar.indec(j).rep)) {
                    const std::vector<Rational> coords =
                        coordinates_in_basis(compose(b, compose(phi, a)), ar.hom(i, j));
                    if (!ideal.contains_coords(i, j, coords)) return false;
                }
        }
    }
    return true;
}

MorphismRep left_approximation(const Ideal& ideal, int source_index) {
    const ARQuiver& ar = ideal.ar();
    const Rep& X = ar.indec(source_index).rep;
    std::vector<Rep> targets;
    std::vector<MorphismRep> parts;
    for (int j = 0; j < ar.count(); ++j)
        for (const MorphismRep& f : ideal.basis_morphisms(source_index, j)) {
            targets.push_back(ar.indec(j).rep);
            parts.push_back(f);
        }
    if (parts.empty()) return zero_morphism(X, zero_rep(ar.quiver()));
    return into_sum(direct_sum(targets), parts);
}

bool is_left_factoring(const Ideal& ideal, int source_index, const MorphismRep& f, bool strongly) {
    const ARQuiver& ar = ideal.ar();
    const Rep& X = ar.indec(source_index).rep;
    if (!(f.source == X))
        throw std::invalid_argument("is_left_factoring: morphism does not start at the source");
    const Rep& M = f.target;

    for (int j = 0; j < ar.count(); ++j) {
        const std::vector<MorphismRep> to_factor = ideal.basis_morphisms(source_index, j);
        if (to_factor.empty()) continue;
        const Rep& Yj = ar.indec(j).rep;

        std::vector<MorphismRep> allowed;
        const std::vector<MorphismRep> full = hom_basis(M, Yj);
        if (strongly) {
            const Subspace V = ideal_value_at(ideal, M, Yj);
            const Matrix& rows = V.basis();
            for (std::size_t r = 0; r < rows.rows(); ++r) {
                std::vector<Rational> coeffs;
                for (std::size_t c = 0; c < rows.cols(); ++c) coeffs.push_back(rows.at(r, c));
                allowed.push_back(combination(M, Yj, full, coeffs));
            }
        } else {
            allowed = full;
        }

        const std::size_t ambient = morphism_vector(zero_morphism(X, Yj)).size();
        std::vector<std::vector<Rational>> rows;
        for (const MorphismRep& g : allowed) rows.push_back(morphism_vector(compose(g, f)));
        const Subspace reachable = Subspace::span(stack_rows(rows, ambient), ambient);
        for (const MorphismRep& phi : to_factor)
            if (!reachable.contains(morphism_vector(phi))) return false;
    }
    return true;
}

bool sampled_left_idempotent(const Ideal& ideal, std::uint64_t seed) {
    const ARQuiver& ar = ideal.ar();
    std::mt19937_64 rng(seed);

    std::vector<std::pair<int, MorphismRep>> samples;
    for (int i = 0; i < ar.count(); ++i) {
        for (int j = 0; j < ar.count(); ++j)
            for (const MorphismRep& f : ideal.basis_morphisms(i, j)) samples.push_back({i, f});
        samples.push_back({i, left_approximation(ideal, i)});

        // Two seeded small combinations per source, when the row is nonzero.
        std::vector<int> nonzero_targets;
        for (int j = 0; j < ar.count(); ++j)
            if (!ideal.at(i, j).is_zero()) nonzero_targets.push_back(j);
        if (nonzero_targets.empty()) continue;
        for (int t = 0; t < 2; ++t) {
            const int j = nonzero_targets[rng() % nonzero_targets.size()];
            const std::vector<MorphismRep> basis = ideal.basis_morphisms(i, j);
            MorphismRep f = zero_morphism(ar.indec(i).rep, ar.indec(j).rep);
            bool nonzero = false;
            for (const MorphismRep& b : basis) {
                const int c = static_cast<int>(rng() % 5) - 2;
                if (c != 0) {
                    f = add(f, scale(Rational(c), b));
                    nonzero = true;
                }
            }
            if (nonzero) samples.push_back({i, f});
        }
    }

    for (const auto& [i, f] : samples)
        if (is_left_factoring(ideal, i, f, false) && !is_left_factoring(ideal, i, f, true))
            return false;
    return true;
}

FpIdempotentCheck is_fp_idempotent(const Ideal& ideal) {
    FpIdempotentCheck check;
    check.unit_objects = ideal.unit_objects();
    check.holds = (ideal == ideal_from_add(ideal.ar(), check.unit_objects));
    return check;
}

Ideal max_fp_idempotent_subideal(const Ideal& ideal) {
    return ideal_from_add(ideal.ar(), ideal.unit_objects());
}

TraceFactorization trace_factorize(const Ideal& ideal, const MorphismRep& phi) {
    if (!ideal_contains(ideal, phi))
        throw std::invalid_argument("trace_factorize: morphism is not in the ideal");
    const FpIdempotentCheck check = is_fp_idempotent(ideal);
    if (!check.holds)
        throw std::invalid_argument("trace_factorize: ideal is not fp-idempotent");
    const ARQuiver& ar = ideal.ar();
    const Rep& X = phi.source;
    const Rep& Y = phi.target;
    const int n = X.quiver.vertex_count;

    // Trace subrepresentation of Y: sum of images of all maps from add U.
    std::vector<Subspace> trace_spaces;
    for (int v = 0; v < n; ++v) trace_spaces.push_back(Subspace::zero(Y.dims[v]));
    for (int u : check.unit_objects)
        for (const MorphismRep& g : hom_basis(ar.indec(u).rep, Y)) {
            const std::vector<Subspace> im = image_subspaces(g);
            for (int v = 0; v < n; ++v) trace_spaces[v] = trace_spaces[v].sum(im[v]);
        }
    SubRep trace = sub_rep(Y, trace_spaces);

    // Coreduction of X: quotient by the common kernel of all maps to add U.
    std::vector<Subspace> kernel_spaces;
    for (int v = 0; v < n; ++v) kernel_spaces.push_back(Subspace::full(X.dims[v]));
    for (int u : check.unit_objects)
        for (const MorphismRep& h : hom_basis(X, ar.indec(u).rep))
            for (int v = 0; v < n; ++v)
                kernel_spaces[v] = kernel_spaces[v].intersect(
                    Subspace::span(nullspace(h.components[v]), X.dims[v]));
    QuotRep coreduction = quotient_rep(X, kernel_spaces);

    // Middle map: phi corestricts to the trace and kills the common kernel.
    MorphismRep middle = zero_morphism(coreduction.rep, trace.rep);
    for (int v = 0; v < n; ++v) {
        const Matrix& incl = trace.inclusion.components[v];
        const Matrix& proj = coreduction.projection.components[v];
        Matrix psi(trace.rep.dims[v], X.dims[v]);
        for (int c = 0; c < X.dims[v]; ++c) {
            std::vector<Rational> col(Y.dims[v]);
            for (int r = 0; r < Y.dims[v]; ++r) col[r] = phi.components[v].at(r, c);
            const auto sol = solve(incl, col);
            if (!sol) throw std::logic_error("trace_factorize: image escapes the trace");
            for (int r = 0; r < trace.rep.dims[v]; ++r) psi.at(r, c) = (*sol)[r];
        }
        Matrix section(X.dims[v], coreduction.rep.dims[v]);
        for (int c = 0; c < coreduction.rep.dims[v]; ++c) {
            std::vector<Rational> e(coreduction.rep.dims[v], Rational(0));
            e[c] = 1;
            const auto sol = solve(proj, e);
            if (!sol) throw std::logic_error("trace_factorize: projection is not surjective");
            for (int r = 0; r < X.dims[v]; ++r) section.at(r, c) = (*sol)[r];
        }
        middle.components[v] = psi * section;
    }
    if (!is_valid_morphism(middle))
        throw std::logic_error("trace_factorize: middle map is not a morphism");
    if (!(compose(trace.inclusion, compose(middle, coreduction.projection)) == phi))
        throw std::logic_error("trace_factorize: factorization does not recompose");
    if (!ideal_contains(ideal, middle))
        throw std::logic_error("trace_factorize: middle map escapes the ideal");
    // The ideal starts in the coreduction and ends in the trace: I(C', J) is
    // all of Hom(C', J) for injective J, and I(P, C'') is all of Hom(P, C'')
    // for projective P.
    for (int k = 0; k < ar.count(); ++k) {
        if (ar.indec(k).is_injective &&
            !ideal_value_at(ideal, coreduction.rep, ar.indec(k).rep).is_full())
            throw std::logic_error(
                "trace_factorize: the ideal does not start in the coreduction");
        if (ar.indec(k).is_projective &&
            !ideal_value_at(ideal, ar.indec(k).rep, trace.rep).is_full())
            throw std::logic_error("trace_factorize: the ideal does not end in the trace");
    }
    return {std::move(coreduction), std::move(trace), std::move(middle)};
}

Ideal ideal_of_functor_vanishing(const ARQuiver& ar, const FpFunctor& F) {
    const Rep& A = F.presenter.source;
    const Rep& B = F.presenter.target;
    Ideal out(ar);
    for (int j = 0; j < ar.count(); ++j) {
        const Rep& Mj = ar.indec(j).rep;
        // Image of Hom(f, M_j) in the vectorized Hom(A, M_j).
        const std::size_t ambient = morphism_vector(zero_morphism(A, Mj)).size();
        std::vector<std::vector<Rational>> image_rows;
        for (const MorphismRep& g : hom_basis(B, Mj))
            image_rows.push_back(morphism_vector(compose(g, F.presenter)));
        const Subspace image = Subspace::span(stack_rows(image_rows, ambient), ambient);
        const Matrix R = reduction_matrix(image);

        for (int i = 0; i < ar.count(); ++i) {
            const std::size_t d = static_cast<std::size_t>(ar.hom_dim(i, j));
            if (d == 0) continue;
            const std::vector<MorphismRep> hom_A_Mi = hom_basis(A, ar.indec(i).rep);
            if (hom_A_Mi.empty()) {
                out.set(i, j, Subspace::full(d));
                continue;
            }
            std::vector<std::vector<Rational>> constraints;
            for (const MorphismRep& h : hom_A_Mi) {
                Matrix T(ambient, d);
                for (std::size_t c = 0; c < d; ++c) {
                    const std::vector<Rational> col =
                        morphism_vector(compose(ar.hom(i, j)[c], h));
                    for (std::size_t r = 0; r < ambient; ++r) T.at(r, c) = col[r];
                }
                const Matrix C = R * T;
                for (std::size_t r = 0; r < ambient; ++r) constraints.push_back(C.row(r));
            }
            out.set(i, j, Subspace::span(nullspace(stack_rows(constraints, d)), d));
        }
    }
    return out;
}

MatlisContext make_matlis_context(const ARQuiver& ar) {
    MatlisContext ctx{&ar, ARQuiver::knit(opposite(ar.quiver())), {}, {}};
    for (int i = 0; i < ar.count(); ++i) {
        auto [idx, iso] = ctx.dual.classify(matlis_dual_rep(ar.indec(i).rep));
        ctx.dual_index.push_back(idx);
        ctx.dual_iso.push_back(std::move(iso));
    }
    return ctx;
}

Ideal matlis_dual_ideal(const MatlisContext& ctx, const Ideal& ideal) {
    const ARQuiver& ar = *ctx.original;
    Ideal out(ctx.dual);
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j) {
            const int di = ctx.dual_index[i];
            const int dj = ctx.dual_index[j];
            const std::size_t d = static_cast<std::size_t>(ctx.dual.hom_dim(dj, di));
            if (d == 0) continue;
            std::vector<std::vector<Rational>> rows;
            for (const MorphismRep& f : ideal.basis_morphisms(i, j)) {
                const MorphismRep psi =
                    compose(ctx.dual_iso[i], compose(matlis_dual_morphism(f),
                                                     inverse_morphism(ctx.dual_iso[j])));
                rows.push_back(coordinates_in_basis(psi, ctx.dual.hom(dj, di)));
            }
            out.set(dj, di, Subspace::span(stack_rows(rows, d), d));
        }
    return out;
}

Ideal matlis_dual_ideal_back(const MatlisContext& ctx, const Ideal& dual_ideal) {
    const ARQuiver& ar = *ctx.original;
    Ideal out(ar);
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j) {
            const std::size_t d = static_cast<std::size_t>(ar.hom_dim(i, j));
            if (d == 0) continue;
            const int di = ctx.dual_index[i];
            const int dj = ctx.dual_index[j];
            // Matrix of the forward transport on the canonical hom basis;
            // invertible because the duality is an anti-equivalence.
            Matrix T(d, d);
            for (std::size_t c = 0; c < d; ++c) {
                const MorphismRep psi = compose(
                    ctx.dual_iso[i],
                    compose(matlis_dual_morphism(ar.hom(i, j)[c]),
                            inverse_morphism(ctx.dual_iso[j])));
                const std::vector<Rational> col =
                    coordinates_in_basis(psi, ctx.dual.hom(dj, di));
                for (std::size_t r = 0; r < d; ++r) T.at(r, c) = col[r];
            }
            const auto Tinv = inverse(T);
            if (!Tinv) throw std::logic_error("duality transport is not invertible");
            const Matrix& dual_basis = dual_ideal.at(dj, di).basis();
            std::vector<std::vector<Rational>> rows;
            for (std::size_t r = 0; r < dual_basis.rows(); ++r)
                rows.push_back(Tinv->apply(dual_basis.row(r)));
            out.set(i, j, Subspace::span(stack_rows(rows, d), d));
        }
    return out;
}

std::vector<Ideal> random_ideal_corpus(const ARQuiver& ar, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < ar.count(); ++i)
        for (int j = 0; j < ar.count(); ++j)
            if (ar.hom_dim(i, j) > 0) pairs.push_back({i, j});

    std::vector<Ideal> corpus;
    for (int c = 0; c < count; ++c) {
        const int n_gens = 1 + static_cast<int>(rng() % 2);
        std::vector<MorphismRep> gens;
        for (int g = 0; g < n_gens; ++g) {
            const auto [i, j] = pairs[rng() % pairs.size()];
            const std::vector<MorphismRep>& basis = ar.hom(i, j);
            MorphismRep f = zero_morphism(ar.indec(i).rep, ar.indec(j).rep);
            bool nonzero = false;
            while (!nonzero) {
                for (const MorphismRep& b : basis) {
                    const int coeff = static_cast<int>(rng() % 5) - 2;
                    if (coeff != 0) {
                        f = add(f, scale(Rational(coeff), b));
                        nonzero = true;
                    }
                }
            }
            gens.push_back(f);
        }
        corpus.push_back(ideal_generate(ar, gens));
    }
    return corpus;
}

}  // namespace exactlab
