#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/hom.hpp"
#include "exactlab/ideal.hpp"
#include "exactlab/quiver.hpp"
#include "exactlab/rep.hpp"
#include "exactlab/subspace.hpp"

using namespace exactlab;

// A_2 with arrow 0 -> 1 knits to m0 = (1,1) = P(0) = I(1), m1 = (0,1) = P(1)
// (the only non-injective), m2 = (1,0) = I(0). The nonzero non-identity homs
// are the inclusion m1 -> m0 and the projection m0 -> m2, and they compose
// to zero, so rad^2 = 0.

namespace {

const ARQuiver& a2() {
    static const ARQuiver ar = ARQuiver::knit(linear_quiver(2));
    return ar;
}

std::vector<int> interval_dims(int i, int j) {
    std::vector<int> dims(3, 0);
    for (int v = i; v <= j; ++v) dims[v] = 1;
    return dims;
}

}  // namespace

TEST_CASE("zero, hom, and radical ideals on A_2 have the expected entries") {
    const ARQuiver& ar = a2();
    REQUIRE(ar.indec(0).rep.dims == std::vector<int>{1, 1});
    REQUIRE(ar.indec(1).rep.dims == std::vector<int>{0, 1});
    REQUIRE(ar.indec(2).rep.dims == std::vector<int>{1, 0});

    CHECK(zero_ideal(ar).total_dim() == 0);

    const Ideal hom = hom_ideal(ar);
    CHECK(hom.total_dim() == 5);  // three identities + two radical maps
    CHECK(hom.unit_objects() == std::vector<int>{0, 1, 2});

    const Ideal rad = radical_ideal(ar);
    CHECK(rad.total_dim() == 2);
    CHECK(rad.at(1, 0).is_full());
    CHECK(rad.at(0, 2).is_full());
    for (int i = 0; i < 3; ++i) CHECK(rad.at(i, i).is_zero());
    CHECK(rad.unit_objects().empty());
    CHECK(rad.subset_of(hom));
    CHECK_FALSE(hom.subset_of(rad));
}

TEST_CASE("radical of A_2 is nilpotent and its omega power vanishes") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);
    CHECK(ideal_power(rad, 2) == zero_ideal(ar));
    CHECK(ideal_power(rad, 5) == zero_ideal(ar));
    CHECK(omega_power(rad) == zero_ideal(ar));
    CHECK(omega_power(hom_ideal(ar)) == hom_ideal(ar));
    CHECK_THROWS_AS((void)ideal_power(rad, 0), std::invalid_argument);
}

TEST_CASE("add-ideal of the big projective on A_2") {
    const ARQuiver& ar = a2();
    const Ideal add = ideal_from_add(ar, {0});
    // End(m0), plus everything into m0 and out of m0; the through-composite
    // m1 -> m0 -> m2 is zero, so (1, 2) stays empty.
    CHECK(add.total_dim() == 3);
    CHECK(add.at(0, 0).is_full());
    CHECK(add.at(1, 0).is_full());
    CHECK(add.at(0, 2).is_full());
    CHECK(add.at(1, 2).is_zero());
    CHECK(add.contains_identity(0));
    CHECK_FALSE(add.contains_identity(1));
    CHECK(add.unit_objects() == std::vector<int>{0});
    CHECK(radical_ideal(ar).subset_of(add));

    const FpIdempotentCheck check = is_fp_idempotent(add);
    CHECK(check.holds);
    CHECK(check.unit_objects == std::vector<int>{0});
}

TEST_CASE("the radical is not fp-idempotent but its omega power is") {
    const ARQuiver& ar = a2();
    CHECK_FALSE(is_fp_idempotent(radical_ideal(ar)).holds);
    const FpIdempotentCheck omega = is_fp_idempotent(omega_power(radical_ideal(ar)));
    CHECK(omega.holds);
    CHECK(omega.unit_objects.empty());
    CHECK(is_fp_idempotent(hom_ideal(ar)).holds);
}

TEST_CASE("ideal generation from explicit morphisms") {
    const ARQuiver& ar = a2();
    const MorphismRep inc = ar.hom(1, 0).front();
    const MorphismRep def = ar.hom(0, 2).front();

    const Ideal from_inc = ideal_generate(ar, {inc});
    CHECK(from_inc.total_dim() == 1);
    CHECK(from_inc.at(1, 0).is_full());

    CHECK(ideal_generate(ar, {inc, def}) == radical_ideal(ar));
    CHECK(ideal_generate(ar, {}) == zero_ideal(ar));
    CHECK(ideal_generate(ar, {identity_morphism(ar.indec(0).rep)}) ==
          ideal_from_add(ar, {0}));
}

TEST_CASE("sum, intersection, and the asymmetry of the composition product") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);
    const Ideal add = ideal_from_add(ar, {0});

    CHECK(ideal_sum(rad, add) == add);
    CHECK(ideal_intersect(rad, add) == rad);
    CHECK(ideal_product(hom_ideal(ar), hom_ideal(ar)) == hom_ideal(ar));

    // "outer after inner": add o rad keeps only the inclusion into m0, while
    // rad o add keeps only the projection out of m0.
    const Ideal add_after_rad = ideal_product(add, rad);
    CHECK(add_after_rad.total_dim() == 1);
    CHECK(add_after_rad.at(1, 0).is_full());

    const Ideal rad_after_add = ideal_product(rad, add);
    CHECK(rad_after_add.total_dim() == 1);
    CHECK(rad_after_add.at(0, 2).is_full());

    CHECK_FALSE(add_after_rad == rad_after_add);
}

TEST_CASE("ordinal powers agree with finite and omega powers") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);
    const Ideal add = ideal_from_add(ar, {0});

    CHECK(ordinal_power(rad, {0, 1}) == rad);
    CHECK(ordinal_power(rad, {0, 3}) == ideal_power(rad, 3));
    CHECK(ordinal_power(rad, {1, 0}) == omega_power(rad));
    CHECK(ordinal_power(add, {1, 0}) == add);   // add-ideals are idempotent
    CHECK(ordinal_power(add, {2, 5}) == add);
    CHECK(ordinal_power(rad, {1, 2}) == zero_ideal(ar));
    CHECK_THROWS_AS((void)ordinal_power(rad, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS((void)ordinal_power(rad, {-1, 1}), std::invalid_argument);
}

TEST_CASE("membership and values on non-indecomposable modules") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);
    const MorphismRep inc = ar.hom(1, 0).front();

    CHECK(ideal_contains(rad, inc));
    CHECK_FALSE(ideal_contains(rad, identity_morphism(ar.indec(0).rep)));
    CHECK(ideal_contains(rad, zero_morphism(ar.indec(2).rep, ar.indec(1).rep)));

    // Hom(m0 + m1, m0) is two-dimensional; the radical value inside it is
    // exactly the maps vanishing on the first summand.
    const DirectSumRep sum = direct_sum({ar.indec(0).rep, ar.indec(1).rep});
    CHECK(hom_basis(sum.sum, ar.indec(0).rep).size() == 2);
    CHECK(ideal_value_at(rad, sum.sum, ar.indec(0).rep).dim() == 1);
    CHECK(ideal_value_at(hom_ideal(ar), sum.sum, ar.indec(0).rep).is_full());
}

TEST_CASE("basis morphisms of an ideal entry are valid members") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);
    const auto basis = rad.basis_morphisms(1, 0);
    REQUIRE(basis.size() == 1);
    CHECK(is_valid_morphism(basis.front()));
    CHECK(ideal_contains(rad, basis.front()));
}

TEST_CASE("trace factorization through an add-ideal on A_2") {
    const ARQuiver& ar = a2();
    const Ideal add = ideal_from_add(ar, {0});
    const MorphismRep inc = ar.hom(1, 0).front();

    const TraceFactorization t = trace_factorize(add, inc);
    // The coreduction keeps all of m1 (the inclusion is injective), and the
    // trace of add(m0) in m0 is m0 itself.
    CHECK(t.coreduction.rep.dims == std::vector<int>{0, 1});
    CHECK(t.trace.rep.dims == std::vector<int>{1, 1});
    CHECK(ideal_contains(add, t.middle));
    CHECK(compose(t.trace.inclusion, compose(t.middle, t.coreduction.projection)) == inc);

    // The zero morphism factors with zero middle.
    const TraceFactorization z =
        trace_factorize(add, zero_morphism(ar.indec(1).rep, ar.indec(0).rep));
    CHECK(is_zero_morphism(z.middle));
}

TEST_CASE("trace factorization rejects non-members and non-fp-idempotent ideals") {
    const ARQuiver& ar = a2();
    const Ideal add = ideal_from_add(ar, {0});
    const MorphismRep inc = ar.hom(1, 0).front();

    CHECK_THROWS_AS((void)trace_factorize(add, identity_morphism(ar.indec(1).rep)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)trace_factorize(radical_ideal(ar), inc), std::invalid_argument);
}

TEST_CASE("trace factorization of a through-composite on A_3") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    const int big = *ar.find_by_dims(interval_dims(0, 2));
    const int x = *ar.find_by_dims(interval_dims(1, 2));
    const int y = *ar.find_by_dims(interval_dims(0, 1));
    const Ideal add = ideal_from_add(ar, {big});

    REQUIRE(ar.hom_dim(x, big) == 1);
    REQUIRE(ar.hom_dim(big, y) == 1);
    const MorphismRep through = compose(ar.hom(big, y).front(), ar.hom(x, big).front());
    REQUIRE_FALSE(is_zero_morphism(through));
    REQUIRE(ideal_contains(add, through));

    const TraceFactorization t = trace_factorize(add, through);
    CHECK(t.coreduction.rep.dims == interval_dims(1, 2));  // embeds in the big module
    CHECK(t.trace.rep.dims == interval_dims(0, 1));        // quotient of the big module
    CHECK(ideal_contains(add, t.middle));
    CHECK(compose(t.trace.inclusion, compose(t.middle, t.coreduction.projection)) ==
          through);
}

TEST_CASE("left approximations and factoring conditions") {
    const ARQuiver& ar = a2();
    const Ideal rad = radical_ideal(ar);

    // rad(m1, -) is concentrated in the inclusion into m0.
    const MorphismRep f = left_approximation(rad, 1);
    CHECK(f.source.dims == std::vector<int>{0, 1});
    CHECK(f.target.dims == std::vector<int>{1, 1});
    CHECK(ideal_contains(rad, f));
    CHECK(is_left_factoring(rad, 1, f, false));
    // The factoring map must be an iso onto m0, which is not radical.
    CHECK_FALSE(is_left_factoring(rad, 1, f, true));

    // The zero ideal is approximated by the map to the zero module.
    const MorphismRep z = left_approximation(zero_ideal(ar), 0);
    CHECK(z.target.dims == std::vector<int>{0, 0});
    CHECK(is_left_factoring(zero_ideal(ar), 0, z, true));

    // For the full hom ideal the identity is a strong approximation.
    CHECK(is_left_factoring(hom_ideal(ar), 0, identity_morphism(ar.indec(0).rep), true));
}

TEST_CASE("sampled left idempotency separates fp-idempotent ideals from the radical") {
    const ARQuiver& ar = a2();
    CHECK(sampled_left_idempotent(ideal_from_add(ar, {0}), 7));
    CHECK(sampled_left_idempotent(hom_ideal(ar), 7));
    CHECK(sampled_left_idempotent(zero_ideal(ar), 7));
    // The inclusion m1 -> m0 is left rad-factoring but not strongly so.
    CHECK_FALSE(sampled_left_idempotent(radical_ideal(ar), 7));
}

TEST_CASE("Matlis duality transports ideals and preserves fp-idempotency") {
    const ARQuiver& ar = a2();
    const MatlisContext ctx = make_matlis_context(ar);

    CHECK(matlis_dual_ideal(ctx, radical_ideal(ar)) == radical_ideal(ctx.dual));
    CHECK(matlis_dual_ideal(ctx, hom_ideal(ar)) == hom_ideal(ctx.dual));

    const Ideal add = ideal_from_add(ar, {0});
    CHECK(is_fp_idempotent(matlis_dual_ideal(ctx, add)).holds);
    CHECK_FALSE(is_fp_idempotent(matlis_dual_ideal(ctx, radical_ideal(ar))).holds);

    for (const Ideal& ideal : random_ideal_corpus(ar, 8, 99)) {
        CHECK(matlis_dual_ideal_back(ctx, matlis_dual_ideal(ctx, ideal)) == ideal);
        CHECK(is_fp_idempotent(ideal).holds ==
              is_fp_idempotent(matlis_dual_ideal(ctx, ideal)).holds);
    }
}

TEST_CASE("random corpora are deterministic for a fixed seed") {
    const ARQuiver& ar = a2();
    const auto first = random_ideal_corpus(ar, 6, 2026);
    const auto second = random_ideal_corpus(ar, 6, 2026);
    REQUIRE(first.size() == 6);
    for (std::size_t k = 0; k < first.size(); ++k) CHECK(first[k] == second[k]);
}

TEST_CASE("omega powers sit between the maximal fp-idempotent subideal and the ideal") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    auto corpus = random_ideal_corpus(ar, 10, 31);
    corpus.push_back(radical_ideal(ar));
    corpus.push_back(hom_ideal(ar));
    for (const Ideal& ideal : corpus) {
        const Ideal omega = omega_power(ideal);
        const Ideal max_sub = max_fp_idempotent_subideal(ideal);
        CHECK(is_fp_idempotent(omega).holds);
        CHECK(omega.subset_of(max_sub));
        CHECK(max_sub.subset_of(ideal));
    }
}
