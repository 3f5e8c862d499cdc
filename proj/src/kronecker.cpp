#include "exactlab/kronecker.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "exactlab/fp_functor.hpp"
#include "exactlab/subspace.hpp"

namespace exactlab {

namespace {

Matrix drop_last(int m) {
    Matrix out(m > 0 ? m - 1 : 0, m);
    for (int i = 0; i + 1 < m; ++i) out.at(i, i) = 1;
    return out;
}

Matrix drop_first(int m) {
    Matrix out(m > 0 ? m - 1 : 0, m);
    for (int i = 0; i + 1 < m; ++i) out.at(i, i + 1) = 1;
    return out;
}

Matrix embed_top(int m) {
    Matrix out(m + 1, m);
    for (int i = 0; i < m; ++i) out.at(i, i) = 1;
    return out;
}

Matrix shift_down(int m) {
    Matrix out(m + 1, m);
    for (int i = 0; i < m; ++i) out.at(i + 1, i) = 1;
    return out;
}

Matrix jordan(int n, const Rational& lambda) {
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) out.at(i, i) = lambda;
    for (int i = 0; i + 1 < n; ++i) out.at(i + 1, i) = 1;
    return out;
}

MorphismRep k_morphism(Rep src, Rep tgt, Matrix c0, Matrix c1) {
    MorphismRep f{std::move(src), std::move(tgt), {std::move(c0), std::move(c1)}};
    if (!is_valid_morphism(f)) throw std::logic_error("constructed map is not a morphism");
    return f;
}

/// R(lambda, m) -> R(lambda, m-1), both components the truncation.
MorphismRep tube_down(const KronModel& model, const KLabel& l, int m) {
    return k_morphism(k_rep(model, k_r(l, m)), k_rep(model, k_r(l, m - 1)), drop_last(m),
                      drop_last(m));
}

/// R(lambda, m) -> R(lambda, m+1), both components the shift.
MorphismRep tube_up(const KronModel& model, const KLabel& l, int m) {
    return k_morphism(k_rep(model, k_r(l, m)), k_rep(model, k_r(l, m + 1)), shift_down(m),
                      shift_down(m));
}

/// Q_m -> Q_{m-1}, the two irreducible maps.
MorphismRep preinj_u(const KronModel& model, int m) {
    return k_morphism(k_rep(model, k_q(m)), k_rep(model, k_q(m - 1)), drop_last(m),
                      drop_last(m - 1));
}

MorphismRep preinj_v(const KronModel& model, int m) {
    return k_morphism(k_rep(model, k_q(m)), k_rep(model, k_q(m - 1)), drop_first(m),
                      drop_first(m - 1));
}

/// P_m -> P_{m+1}, the two irreducible maps.
MorphismRep preproj_s(const KronModel& model, int m) {
    return k_morphism(k_rep(model, k_p(m)), k_rep(model, k_p(m + 1)), embed_top(m - 1),
                      embed_top(m));
}

MorphismRep preproj_t(const KronModel& model, int m) {
    return k_morphism(k_rep(model, k_p(m)), k_rep(model, k_p(m + 1)), shift_down(m - 1),
                      shift_down(m));
}

std::vector<KLabel> validated_labels(const KronModel& model, const std::vector<KLabel>& labels) {
    for (const KLabel& l : labels)
        if (std::find(model.labels.begin(), model.labels.end(), l) == model.labels.end())
            throw std::invalid_argument("unknown label: " + to_string(l));
    std::vector<KLabel> out = labels;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<MorphismRep> subspace_morphisms(const Subspace& S, const Rep& X, const Rep& Y) {
    std::vector<MorphismRep> out;
    const Matrix& rows = S.basis();
    for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back(morphism_from_vector(X, Y, rows.row(r)));
    return out;
}

Subspace span_of_vectors(const std::vector<std::vector<Rational>>& vectors, std::size_t ambient) {
    Matrix rows(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = vectors[i][j];
    return Subspace::span(rows, ambient);
}

/// Whether every indecomposable summand of K is regular: no nonzero map to
/// an in-range preprojective and none from an in-range preinjective. A
/// preprojective or preinjective summand would itself lie in range, so the
/// bounded scan is conclusive.
bool all_summands_regular(const KronModel& model, const Rep& K) {
    const int total = total_dim(K);
    if (total == 0) return true;
    for (int n = 1; 2 * n - 1 <= total; ++n) {
        if (hom_dim(K, k_rep(model, k_p(n))) != 0) return false;
        if (hom_dim(k_rep(model, k_q(n)), K) != 0) return false;
    }
    return true;
}

}  // namespace

KLabel k_label(const Rational& v) { return {false, v}; }
KLabel k_label_infinity() { return {true, Rational(0)}; }

std::string to_string(const KLabel& l) { return l.is_infinite ? "inf" : to_string(l.value); }

KPoint k_p(int n) { return {KPointKind::Preprojective, n, {}}; }
KPoint k_q(int n) { return {KPointKind::Preinjective, n, {}}; }
KPoint k_r(const KLabel& label, int n) { return {KPointKind::Regular, n, label}; }
KPoint k_prufer(const KLabel& label) { return {KPointKind::Prufer, 0, label}; }
KPoint k_adic(const KLabel& label) { return {KPointKind::Adic, 0, label}; }
KPoint k_generic() { return {KPointKind::Generic, 0, {}}; }

std::string to_string(const KPoint& p) {
    switch (p.kind) {
        case KPointKind::Preprojective: return "P" + std::to_string(p.index);
        case KPointKind::Preinjective: return "Q" + std::to_string(p.index);
        case KPointKind::Regular:
            return "R(" + to_string(p.label) + "," + std::to_string(p.index) + ")";
        case KPointKind::Prufer: return "Prufer(" + to_string(p.label) + ")";
        case KPointKind::Adic: return "Adic(" + to_string(p.label) + ")";
        case KPointKind::Generic: return "G";
    }
    return "?";
}

KClosedSet k_normalize(KClosedSet set) {
    std::sort(set.finite_points.begin(), set.finite_points.end());
    set.finite_points.erase(std::unique(set.finite_points.begin(), set.finite_points.end()),
                            set.finite_points.end());
    std::sort(set.prufer_labels.begin(), set.prufer_labels.end());
    set.prufer_labels.erase(std::unique(set.prufer_labels.begin(), set.prufer_labels.end()),
                            set.prufer_labels.end());
    std::sort(set.adic_labels.begin(), set.adic_labels.end());
    set.adic_labels.erase(std::unique(set.adic_labels.begin(), set.adic_labels.end()),
                          set.adic_labels.end());
    return set;
}

KronModel make_kron_model(int bound, std::vector<KLabel> labels) {
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    if (labels.empty())
        labels = {k_label(Rational(0)), k_label(Rational(1)), k_label_infinity()};
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return {bound, std::move(labels), kronecker_quiver()};
}

KPointKind k_classify_dims(const std::vector<int>& dims) {
    if (dims.size() != 2 || dims[0] < 0 || dims[1] < 0 || (dims[0] == 0 && dims[1] == 0))
        throw std::invalid_argument("not the dimension vector of a Kronecker indecomposable");
    if (dims[1] == dims[0] + 1) return KPointKind::Preprojective;
    if (dims[0] == dims[1] + 1) return KPointKind::Preinjective;
    if (dims[0] == dims[1]) return KPointKind::Regular;
    throw std::invalid_argument("not the dimension vector of a Kronecker indecomposable");
}

Rep k_rep(const KronModel& model, const KPoint& p) {
    if (!p.is_finite()) throw std::invalid_argument("no matrix model for a symbolic point");
    const int n = p.index;
    if (n < 1) throw std::invalid_argument("point index must be at least 1");
    if (n > model.bound) throw std::invalid_argument("bound exceeded: " + to_string(p));
    Rep rep;
    rep.quiver = model.quiver;
    switch (p.kind) {
        case KPointKind::Preprojective:
            rep.dims = {n - 1, n};
            rep.arrow_maps = {embed_top(n - 1), shift_down(n - 1)};
            break;
        case KPointKind::Preinjective:
            rep.dims = {n, n - 1};
            rep.arrow_maps = {drop_last(n), drop_first(n)};
            break;
        case KPointKind::Regular: {
            if (std::find(model.labels.begin(), model.labels.end(), p.label) ==
                model.labels.end())
                throw std::invalid_argument("unknown label: " + to_string(p.label));
            rep.dims = {n, n};
            if (p.label.is_infinite)
                rep.arrow_maps = {jordan(n, Rational(0)), Matrix::identity(n)};
            else
                rep.arrow_maps = {Matrix::identity(n), jordan(n, p.label.value)};
            break;
        }
        default: throw std::invalid_argument("no matrix model for a symbolic point");
    }
    if (!is_indecomposable(rep)) throw std::logic_error("matrix model is decomposable");
    return rep;
}

std::vector<KPoint> k_points_up_to_index(const KronModel& model, int n_max) {
    if (n_max > model.bound) throw std::invalid_argument("bound exceeded");
    std::vector<KPoint> out;
    for (int n = 1; n <= n_max; ++n) {
        out.push_back(k_p(n));
        out.push_back(k_q(n));
        for (const KLabel& l : model.labels) out.push_back(k_r(l, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<KPoint> k_points_up_to_total_dim(const KronModel& model, int total) {
    std::vector<KPoint> out;
    for (int n = 1; 2 * n - 1 <= total; ++n) {
        if (n > model.bound) throw std::invalid_argument("bound exceeded");
        out.push_back(k_p(n));
        out.push_back(k_q(n));
    }
    for (int n = 1; 2 * n <= total; ++n) {
        if (n > model.bound) throw std::invalid_argument("bound exceeded");
        for (const KLabel& l : model.labels) out.push_back(k_r(l, n));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int k_hom_dim(const KronModel& model, const KPoint& p, const KPoint& q) {
    return hom_dim(k_rep(model, p), k_rep(model, q));
}

int k_euler_form(const std::vector<int>& x, const std::vector<int>& y) {
    return x[0] * y[0] + x[1] * y[1] - 2 * x[0] * y[1];
}

KClosedSet family_closed_set(const KronModel& model, const KIdealFamily& fam) {
    KClosedSet out;
    out.generic = true;
    switch (fam.kind) {
        case KIdealFamily::RadP: out.adic_labels = model.labels; break;
        case KIdealFamily::RadQ: out.prufer_labels = model.labels; break;
        case KIdealFamily::RadRS: {
            const std::vector<KLabel> s = validated_labels(model, fam.s_labels);
            out.prufer_labels = s;
            out.adic_labels = s;
            break;
        }
        case KIdealFamily::RadOmegaPlusOne: break;
        case KIdealFamily::IST: {
            if (fam.s_labels.empty() && fam.t_labels.empty())
                throw std::invalid_argument("IST family requires S or T nonempty");
            out.prufer_labels = validated_labels(model, fam.s_labels);
            out.adic_labels = validated_labels(model, fam.t_labels);
            break;
        }
    }
    return k_normalize(std::move(out));
}

KClosedSet k_tau_closed(const KronModel& model, const KClosedSet& set) {
    KClosedSet out;
    out.prufer_labels = set.prufer_labels;
    out.adic_labels = set.adic_labels;
    out.generic = set.generic;
    for (const KPoint& p : set.finite_points) {
        switch (p.kind) {
            case KPointKind::Preprojective:
                // P_1, P_2 are projective: absorbed into the implicit
                // "union all projectives" on the input side.
                if (p.index >= 3) out.finite_points.push_back(k_p(p.index - 2));
                break;
            case KPointKind::Preinjective:
                if (p.index + 2 > model.bound)
                    throw std::invalid_argument("bound exceeded: tau of " + to_string(p));
                out.finite_points.push_back(k_q(p.index + 2));
                break;
            case KPointKind::Regular: out.finite_points.push_back(p); break;
            default: throw std::invalid_argument("symbolic point in the finite part");
        }
    }
    return k_normalize(std::move(out));
}

Conflation k_ar_sequence(const KronModel& model, const KPoint& end) {
    switch (end.kind) {
        case KPointKind::Preinjective: {
            const int n = end.index;
            if (n + 2 > model.bound)
                throw std::invalid_argument("bound exceeded: start of the sequence at " +
                                            to_string(end));
            const MorphismRep u_top = preinj_u(model, n + 2);
            const MorphismRep v_top = preinj_v(model, n + 2);
            const MorphismRep u_bot = preinj_u(model, n + 1);
            const MorphismRep v_bot = preinj_v(model, n + 1);
            const DirectSumRep mid = direct_sum({u_top.target, v_top.target});
            return {into_sum(mid, {u_top, v_top}),
                    from_sum(mid, {v_bot, scale(Rational(-1), u_bot)})};
        }
        case KPointKind::Preprojective: {
            const int n = end.index;
            if (n <= 2)
                throw std::invalid_argument("no almost split sequence ends at a projective");
            const MorphismRep s_bot = preproj_s(model, n - 2);
            const MorphismRep t_bot = preproj_t(model, n - 2);
            const MorphismRep s_top = preproj_s(model, n - 1);
            const MorphismRep t_top = preproj_t(model, n - 1);
            const DirectSumRep mid = direct_sum({s_bot.target, t_bot.target});
            return {into_sum(mid, {s_bot, t_bot}),
                    from_sum(mid, {t_top, scale(Rational(-1), s_top)})};
        }
        case KPointKind::Regular: {
            const int n = end.index;
            if (n + 1 > model.bound)
                throw std::invalid_argument("bound exceeded: middle of the sequence at " +
                                            to_string(end));
            if (n == 1) {
                const MorphismRep up = tube_up(model, end.label, 1);
                const MorphismRep down = tube_down(model, end.label, 2);
                const DirectSumRep mid = direct_sum({up.target});
                return {into_sum(mid, {up}), from_sum(mid, {scale(Rational(-1), down)})};
            }
            const MorphismRep down_top = tube_down(model, end.label, n);
            const MorphismRep up_top = tube_up(model, end.label, n);
            const MorphismRep up_bot = tube_up(model, end.label, n - 1);
            const MorphismRep down_bot = tube_down(model, end.label, n + 1);
            const DirectSumRep mid = direct_sum({down_top.target, up_top.target});
            return {into_sum(mid, {down_top, up_top}),
                    from_sum(mid, {up_bot, scale(Rational(-1), down_bot)})};
        }
        default: throw std::invalid_argument("no almost split sequence at a symbolic point");
    }
}

bool k_verify_ar_sequence(const KronModel& model, const KPoint& end,
                          const KPoint& expected_start) {
    const Conflation c = k_ar_sequence(model, end);
    if (!is_kernel_cokernel_pair(c.inflation, c.deflation)) return false;
    if (!(c.inflation.source == k_rep(model, expected_start))) return false;
    if (!(c.deflation.target == k_rep(model, end))) return false;
    const FpFunctor F{c.inflation};
    for (const KPoint& z : k_points_up_to_index(model, model.bound)) {
        const int expected = (z == expected_start) ? 1 : 0;
        if (eval_dim(F, k_rep(model, z)) != expected) return false;
    }
    return true;
}

RadOmegaResult rad_c_omega_membership(const KronModel& model, const MorphismRep& phi,
                                      const std::vector<KPoint>& C, int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be at least 1");
    if (is_zero_morphism(phi)) return {RadMembership::In, 0};

    std::vector<KPoint> points = C;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const Rep& X = phi.source;
    const Rep& Y = phi.target;
    std::vector<Rep> reps;
    for (const KPoint& p : points) reps.push_back(k_rep(model, p));

    // The radical between two of the chosen points: everything when the
    // points differ (non-isomorphic indecomposables), the trace-form
    // radical of the endomorphism ring on the diagonal.
    const auto radical_basis = [&](std::size_t a, std::size_t b) {
        const std::vector<MorphismRep> full = hom_basis(reps[a], reps[b]);
        if (!(points[a] == points[b])) return full;
        std::vector<MorphismRep> out;
        const Subspace rad = end_radical_subspace(reps[a], full);
        const Matrix& rows = rad.basis();
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            MorphismRep f = zero_morphism(reps[a], reps[b]);
            for (std::size_t c = 0; c < rows.cols(); ++c)
                if (rows.at(r, c) != 0) f = add(f, scale(rows.at(r, c), full[c]));
            out.push_back(f);
        }
        return out;
    };

    // Layer 1: everything from X into each chosen point.
    std::vector<Subspace> layer;
    std::vector<std::size_t> ambients;
    for (std::size_t a = 0; a < points.size(); ++a) {
        const std::size_t amb = morphism_vector(zero_morphism(X, reps[a])).size();
        ambients.push_back(amb);
        std::vector<std::vector<Rational>> vecs;
        for (const MorphismRep& h : hom_basis(X, reps[a])) vecs.push_back(morphism_vector(h));
        layer.push_back(span_of_vectors(vecs, amb));
    }

    const std::vector<Rational> target = morphism_vector(phi);
    const std::size_t target_ambient = target.size();
    for (int n = 1;; ++n) {
        // I_n: compose the current layer with arbitrary maps into Y.
        std::vector<std::vector<Rational>> vecs;
        for (std::size_t a = 0; a < points.size(); ++a) {
            if (layer[a].is_zero()) continue;
            const std::vector<MorphismRep> outof = hom_basis(reps[a], Y);
            for (const MorphismRep& s : subspace_morphisms(layer[a], X, reps[a]))
                for (const MorphismRep& g : outof)
                    vecs.push_back(morphism_vector(compose(g, s)));
        }
        if (!span_of_vectors(vecs, target_ambient).contains(target))
            return {RadMembership::Out, n};
        if (n == depth) return {RadMembership::InUpToDepth, depth};

        // Next layer: extend every chain by one radical step in add C.
        std::vector<Subspace> next;
        for (std::size_t b = 0; b < points.size(); ++b) {
            std::vector<std::vector<Rational>> step;
            for (std::size_t a = 0; a < points.size(); ++a) {
                if (layer[a].is_zero()) continue;
                for (const MorphismRep& s : subspace_morphisms(layer[a], X, reps[a]))
                    for (const MorphismRep& r : radical_basis(a, b))
                        step.push_back(morphism_vector(compose(r, s)));
            }
            next.push_back(span_of_vectors(step, ambients[b]));
        }
        layer = std::move(next);
    }
}

Conflation k_p1_sequence(const KronModel& model, const KLabel& lambda) {
    const Rep p1 = k_rep(model, k_p(1));
    const Rep r1 = k_rep(model, k_r(lambda, 1));
    const Rep q1 = k_rep(model, k_q(1));
    Matrix inf0(1, 0);
    Matrix inf1(1, 1);
    inf1.at(0, 0) = 1;
    Matrix def0(1, 1);
    def0.at(0, 0) = 1;
    Matrix def1(0, 1);
    const MorphismRep inflation = k_morphism(p1, r1, std::move(inf0), std::move(inf1));
    const MorphismRep deflation = k_morphism(r1, q1, std::move(def0), std::move(def1));
    return {inflation, deflation};
}

P1Report verify_almost_exact_p1(const KronModel& model, const KLabel& lambda, int dim_bound) {
    if (dim_bound < 3)
        throw std::invalid_argument(
            "dimension bound too small: no preprojective beyond P_1 in range");
    P1Report report;
    const Conflation seq = k_p1_sequence(model, lambda);
    report.sequence_is_conflation = is_kernel_cokernel_pair(seq.inflation, seq.deflation);
    report.sequence_non_split = !retraction(seq.inflation).has_value();

    const Rep p1 = seq.inflation.source;
    for (const KPoint& z : k_points_up_to_total_dim(model, dim_bound)) {
        const Rep Z = k_rep(model, z);
        const std::vector<MorphismRep> basis = hom_basis(p1, Z);

        // Sample: zero, every basis morphism, and pairwise sums and
        // differences of basis morphisms.
        std::vector<MorphismRep> samples = {zero_morphism(p1, Z)};
        samples.insert(samples.end(), basis.begin(), basis.end());
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                samples.push_back(add(basis[i], basis[j]));
                samples.push_back(add(basis[i], scale(Rational(-1), basis[j])));
            }

        for (std::size_t mi = 0; mi < samples.size(); ++mi) {
            const MorphismRep& u = samples[mi];
            P1Case c{z, static_cast<int>(mi), "", false};
            const PushoutRep po = pushout(seq.inflation, u);
            if (is_zero_morphism(u)) {
                c.branch = "zero-split";
                c.passed = retraction(po.from_second).has_value();
            } else if (z.kind == KPointKind::Preprojective && z.index == 1) {
                c.branch = "iso-split-combined";
                const DirectSumRep ds = direct_sum({seq.inflation.target, Z});
                const MorphismRep combined = into_sum(ds, {seq.inflation, u});
                c.passed = is_iso(u) && retraction(combined).has_value();
            } else if (z.kind == KPointKind::Preprojective) {
                c.branch = "regular-cokernel";
                const Rep K = cokernel(u).rep;
                const DirectSumRep ds = direct_sum({seq.inflation.target, Z});
                const MorphismRep combined = into_sum(ds, {seq.inflation, u});
                c.passed = is_mono(u) && all_summands_regular(model, K) && is_mono(combined);
            } else {
                c.branch = "nonpreprojective-pushout";
                const Rep C = cokernel(po.from_second).rep;
                c.passed = is_mono(po.from_second) && C.dims == std::vector<int>{1, 0};
            }
            report.cases.push_back(std::move(c));
        }
    }
    return report;
}

}  // namespace exactlab
