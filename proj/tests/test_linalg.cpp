#include <doctest.h>

#include <random>

#include "exactlab/matrix.hpp"
#include "exactlab/rational.hpp"
#include "exactlab/subspace.hpp"

using namespace exactlab;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = Rational(static_cast<int>(rng() % 7) - 3);
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic stays exact") {
    const Rational third = Rational(1) / Rational(3);
    CHECK(third * Rational(3) == Rational(1));
    CHECK(to_string(Rational(-1) / Rational(2)) == "-1/2");
    CHECK(rational_from_string("-1/2") == Rational(-1) / Rational(2));
    CHECK(rational_from_string("7") == Rational(7));
}

TEST_CASE("echelon form, rank and nullspace of a singular matrix") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank(m) == 2);
    const Matrix ns = nullspace(m);
    CHECK(ns.rows() == 1);
    for (std::size_t r = 0; r < ns.rows(); ++r) {
        const auto v = ns.row(r);
        const auto image = m.apply(v);
        for (const Rational& x : image) CHECK(x == 0);
    }
}

TEST_CASE("solve finds a particular solution exactly when consistent") {
    Matrix m = Matrix::from_rows({{1, 1}, {1, -1}});
    const auto sol = solve(m, {Rational(3), Rational(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == Rational(2));
    CHECK((*sol)[1] == Rational(1));

    Matrix singular = Matrix::from_rows({{1, 1}, {2, 2}});
    CHECK_FALSE(solve(singular, {Rational(0), Rational(1)}).has_value());
    CHECK(solve(singular, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("inverse roundtrip on an invertible matrix") {
    Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
    const auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == Matrix::identity(2));
    CHECK(*inv * m == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST_CASE("vectorize and from_vector are inverse") {
    Matrix m = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}});
    CHECK(Matrix::from_vector(m.vectorize(), 2, 3) == m);
}

TEST_CASE("block paste and hstack/vstack agree") {
    Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    Matrix b = Matrix::from_rows({{5}, {6}});
    Matrix h = Matrix::hstack(a, b);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 3);
    Matrix pasted(2, 3);
    pasted.paste(0, 0, a);
    pasted.paste(0, 2, b);
    CHECK(h == pasted);
    CHECK(h.block(0, 0, 2, 2) == a);
}

TEST_CASE("subspace membership, sum and intersection") {
    const Subspace a = Subspace::span(Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}), 3);
    const Subspace b = Subspace::span(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}}), 3);
    CHECK(a.dim() == 2);
    CHECK(a.contains({Rational(2), Rational(-5), Rational(0)}));
    CHECK_FALSE(a.contains({Rational(0), Rational(0), Rational(1)}));
    const Subspace s = a.sum(b);
    CHECK(s.is_full());
    const Subspace i = a.intersect(b);
    CHECK(i.dim() == 1);
    CHECK(i.contains({Rational(0), Rational(7), Rational(0)}));
}

TEST_CASE("dimension formula dim(A+B) = dim A + dim B - dim(A cap B)") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 4;
        const Subspace a = Subspace::span(random_matrix(rng, 2, n), n);
        const Subspace b = Subspace::span(random_matrix(rng, 3, n), n);
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
    }
}

TEST_CASE("reduce and coordinates are consistent with the basis") {
    const Subspace s = Subspace::span(Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}), 3);
    const std::vector<Rational> v = {Rational(2), Rational(2), Rational(-1)};
    CHECK(s.contains(v));
    const std::vector<Rational> coords = s.coordinates(v);
    REQUIRE(coords.size() == s.dim());
    std::vector<Rational> rebuilt(3, Rational(0));
    const Matrix& basis = s.basis();
    for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t c = 0; c < 3; ++c) rebuilt[c] += coords[r] * basis.at(r, c);
    CHECK(rebuilt == v);
    const auto residue = s.reduce({Rational(1), Rational(0), Rational(0)});
    CHECK_FALSE(s.contains({Rational(1), Rational(0), Rational(0)}));
    CHECK(s.sum(Subspace::span(Matrix::from_rows({residue}), 3)).dim() == 3);
}

TEST_CASE("canonical bases make equal subspaces compare equal") {
    const Subspace a = Subspace::span(Matrix::from_rows({{1, 2}, {0, 1}}), 2);
    const Subspace b = Subspace::span(Matrix::from_rows({{3, 1}, {1, 1}}), 2);
    CHECK(a == b);
    CHECK(a.is_full());
}
