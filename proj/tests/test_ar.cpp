#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "exactlab/ar_quiver.hpp"
#include "exactlab/hom.hpp"
#include "exactlab/quiver.hpp"
#include "exactlab/rep.hpp"

using namespace exactlab;

namespace {

Quiver d4_center_sink() {
    Quiver q;
    q.vertex_count = 4;
    q.arrows = {{"a", 1, 0}, {"b", 2, 0}, {"c", 3, 0}};
    return q;
}

std::vector<int> interval_dims(int i, int j) {
    std::vector<int> dims(3, 0);
    for (int v = i; v <= j; ++v) dims[v] = 1;
    return dims;
}

}  // namespace

TEST_CASE("positive root counts match the classical values") {
    CHECK(positive_root_count("A2") == 3);
    CHECK(positive_root_count("A3") == 6);
    CHECK(positive_root_count("A5") == 15);
    CHECK(positive_root_count("D4") == 12);
    CHECK(positive_root_count("D5") == 20);
    CHECK(positive_root_count("E6") == 36);
    CHECK(positive_root_count("E7") == 63);
    CHECK(positive_root_count("E8") == 120);
}

TEST_CASE("knitting discovers exactly one indecomposable per positive root") {
    const ARQuiver a2 = ARQuiver::knit(linear_quiver(2));
    CHECK(a2.count() == 3);
    CHECK(a2.type_label() == "A2");

    const ARQuiver a3 = ARQuiver::knit(linear_quiver(3));
    CHECK(a3.count() == 6);
    CHECK(a3.type_label() == "A3");

    const ARQuiver a5 = ARQuiver::knit(linear_quiver(5));
    CHECK(a5.count() == 15);

    const ARQuiver d4 = ARQuiver::knit(d4_center_sink());
    CHECK(d4.count() == 12);
    CHECK(d4.type_label() == "D4");
}

TEST_CASE("knitting rejects non-Dynkin quivers with the computed graph label") {
    Quiver cycle;
    cycle.vertex_count = 3;
    cycle.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    CHECK_THROWS_WITH_AS(ARQuiver::knit(cycle), doctest::Contains("cyclic"),
                         std::invalid_argument);

    CHECK_THROWS_WITH_AS(ARQuiver::knit(kronecker_quiver()),
                         doctest::Contains("multiple edge"), std::invalid_argument);
}

TEST_CASE("ids, index lookup, and dim-vector lookup are consistent") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    for (int i = 0; i < ar.count(); ++i) {
        CHECK(ar.indec(i).id == "m" + std::to_string(i));
        CHECK(ar.index_of(ar.indec(i).id) == i);
        const auto found = ar.find_by_dims(ar.indec(i).rep.dims);
        REQUIRE(found.has_value());
        CHECK(*found == i);
    }
    CHECK_THROWS_AS((void)ar.index_of("m99"), std::invalid_argument);
    CHECK_FALSE(ar.find_by_dims({2, 2, 2}).has_value());
}

TEST_CASE("projective and injective flags agree with the vertex lookups") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    int projectives = 0;
    int injectives = 0;
    for (int v = 0; v < 3; ++v) {
        const Indec& p = ar.indec(ar.projective_at(v));
        CHECK(p.is_projective);
        CHECK(p.projective_vertex == v);
        CHECK(p.rep.dims == projective_rep(ar.quiver(), v).dims);
        const Indec& inj = ar.indec(ar.injective_at(v));
        CHECK(inj.is_injective);
        CHECK(inj.injective_vertex == v);
        CHECK(inj.rep.dims == injective_rep(ar.quiver(), v).dims);
    }
    for (int i = 0; i < ar.count(); ++i) {
        projectives += ar.indec(i).is_projective ? 1 : 0;
        injectives += ar.indec(i).is_injective ? 1 : 0;
    }
    CHECK(projectives == 3);
    CHECK(injectives == 3);
    CHECK(static_cast<int>(ar.non_injectives().size()) == 3);
}

TEST_CASE("linear A_3 indecomposables are the interval modules with tau shifting intervals") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    // Every interval [i, j] occurs.
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            CHECK(ar.find_by_dims(interval_dims(i, j)).has_value());

    // tau [i, j] = [i + 1, j + 1] for the non-projectives (j <= 1).
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j <= 1; ++j) {
            const int idx = *ar.find_by_dims(interval_dims(i, j));
            const auto t = ar.tau(idx);
            REQUIRE(t.has_value());
            CHECK(*t == *ar.find_by_dims(interval_dims(i + 1, j + 1)));
            CHECK(ar.tau_inverse(*t) == idx);
        }
    }
    // Projectives have no tau, injectives no tau-inverse.
    CHECK_FALSE(ar.tau(ar.projective_at(0)).has_value());
    CHECK_FALSE(ar.tau_inverse(ar.injective_at(0)).has_value());
}

TEST_CASE("one almost split sequence per non-injective, and each is a conflation") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    CHECK(ar.sequences().size() == 3);  // count - #injectives
    for (const ARSequence& s : ar.sequences()) {
        CHECK(ar.tau_inverse(s.start) == s.end);
        CHECK(is_kernel_cokernel_pair(s.conflation.inflation, s.conflation.deflation));
        CHECK(ar.sequence_starting_at(s.start).has_value());
        CHECK(ar.sequence_ending_at(s.end).has_value());
        // Middle dims add up (exactness on dimension vectors).
        std::vector<int> mid(3, 0);
        for (int m : s.middle)
            for (int v = 0; v < 3; ++v) mid[v] += ar.indec(m).rep.dims[v];
        for (int v = 0; v < 3; ++v)
            CHECK(mid[v] ==
                  ar.indec(s.start).rep.dims[v] + ar.indec(s.end).rep.dims[v]);
    }
}

TEST_CASE("hom cache dimensions follow the interval overlap rule on linear A_3") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = k; l < 3; ++l) {
                    const int x = *ar.find_by_dims(interval_dims(i, j));
                    const int y = *ar.find_by_dims(interval_dims(k, l));
                    const int expected = (k <= i && i <= l && l <= j) ? 1 : 0;
                    CHECK(ar.hom_dim(x, y) == expected);
                    CHECK(static_cast<int>(ar.hom(x, y).size()) == expected);
                }
}

TEST_CASE("classify returns the index and an explicit isomorphism") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    for (int i = 0; i < ar.count(); ++i) {
        const auto [idx, iso] = ar.classify(ar.indec(i).rep);
        CHECK(idx == i);
        CHECK(is_iso(iso));
        CHECK(iso.source.dims == ar.indec(i).rep.dims);
        CHECK(iso.target.dims == ar.indec(idx).rep.dims);
    }
    // Decomposables are rejected.
    const DirectSumRep s =
        direct_sum({ar.indec(0).rep, ar.indec(1).rep});
    CHECK_THROWS_AS((void)ar.classify(s.sum), std::invalid_argument);
}

TEST_CASE("decompose recovers indices with multiplicities") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));
    const DirectSumRep s = direct_sum(
        {ar.indec(2).rep, ar.indec(0).rep, ar.indec(2).rep, ar.indec(5).rep});
    const auto parts = ar.decompose(s.sum);
    const std::vector<std::pair<int, int>> expected = {{0, 1}, {2, 2}, {5, 1}};
    CHECK(parts == expected);

    CHECK(ar.decompose(zero_rep(ar.quiver())).empty());
}

TEST_CASE("left almost split maps: mesh source map and quotient by the socle") {
    const ARQuiver ar = ARQuiver::knit(linear_quiver(3));

    // Non-injective branch: the map is the inflation of the mesh.
    for (int i : ar.non_injectives()) {
        const MorphismRep f = ar.left_almost_split_map(i);
        CHECK(f.source.dims == ar.indec(i).rep.dims);
        const ARSequence& seq = ar.sequences().at(*ar.sequence_starting_at(i));
        CHECK(f.target.dims == seq.conflation.inflation.target.dims);
        CHECK(is_mono(f));
    }

    // Injective branch: I(2) = (1,1,1) maps onto I(2)/soc = (1,1,0).
    const int top = ar.injective_at(2);
    REQUIRE(ar.indec(top).rep.dims == std::vector<int>{1, 1, 1});
    const MorphismRep g = ar.left_almost_split_map(top);
    CHECK(g.source.dims == std::vector<int>{1, 1, 1});
    CHECK(g.target.dims == std::vector<int>{1, 1, 0});
    CHECK(is_epi(g));
    CHECK_FALSE(is_mono(g));
}
