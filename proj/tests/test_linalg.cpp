#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groves/linalg.hpp"
#include "groves/multipoly.hpp"
#include "groves/tpoly.hpp"
#include "test_support.hpp"

using namespace groves;
using groves::testing::random_antisymmetric;
using groves::testing::random_rational;

TEST_SUITE_BEGIN("exact linalg");

TEST_CASE("rational parsing and printing") {
    CHECK(rational_from_string("22/77") == Rational(2, 7));
    CHECK(rational_from_string("-6/4") == Rational(-3, 2));
    CHECK(rational_from_string("5") == Rational(5));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rational_from_string("a/b"), ParseError);
    CHECK_THROWS_AS(rational_from_string(""), ParseError);
    CHECK_THROWS_AS(rational_from_string("1/2/3"), ParseError);
}

TEST_CASE("multipoly arithmetic and display") {
    MultiPoly a = MultiPoly::variable(1, 3);
    MultiPoly b = MultiPoly::variable(2, 5);
    MultiPoly p = a * b - b * a;
    CHECK(p.is_zero());
    MultiPoly q = (a + b) * (a - b);
    CHECK(q == a * a - b * b);
    CHECK(q.to_string() == "L[1,3]^2 - L[2,5]^2");
    CHECK((a * b + MultiPoly(2)).to_string() == "2 + L[1,3]*L[2,5]");
    CHECK(MultiPoly().to_string() == "0");
    CHECK((-a).to_string("X") == "-X[1,3]");
}

TEST_CASE("determinant basics") {
    CHECK(det(Matrix<Rational>(0, 0)) == Rational(1));
    Matrix<Rational> singular{{Rational(-3, 2), Rational(3, 2)}, {Rational(3, 2), Rational(-3, 2)}};
    CHECK(det(singular) == Rational(0));
    Matrix<Rational> notsquare(2, 3);
    CHECK_THROWS_AS(det(notsquare), ShapeError);
}

TEST_CASE("determinant: bareiss agrees with expansion on random matrices") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng() % 6;
        Matrix<Rational> m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng);
        CHECK(detail::det_bareiss(m) == detail::det_expansion(m));
    }
}

TEST_CASE("inverse") {
    CHECK(inverse(Matrix<Rational>::identity(4)) == Matrix<Rational>::identity(4));
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix<Rational> m(4, 4);
        do {
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_rational(rng);
        } while (det(m) == 0);
        CHECK(m * inverse(m) == Matrix<Rational>::identity(4));
    }
    Matrix<Rational> sing{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(inverse(sing), SingularError);
    CHECK_THROWS_AS(inverse(Matrix<Rational>(2, 3)), ShapeError);
}

TEST_CASE("schur complement") {
    // keep everything: the matrix itself
    Matrix<Rational> m{{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
    CHECK(schur_complement(m, {0, 1}) == m);

    // series path 1-v-2 with unit conductances, keep the endpoints
    Matrix<Rational> k{{Rational(1), Rational(0), Rational(-1)},
                       {Rational(0), Rational(1), Rational(-1)},
                       {Rational(-1), Rational(-1), Rational(2)}};
    Matrix<Rational> expected{{Rational(1, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(1, 2)}};
    CHECK(schur_complement(k, {0, 1}) == expected);

    // random positive definite vs the definition
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        Matrix<Rational> a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = random_rational(rng);
        Matrix<Rational> spd = a.transpose() * a + Matrix<Rational>::identity(4);
        std::vector<std::size_t> keep = {0, 2}, drop = {1, 3};
        Matrix<Rational> direct = spd.submatrix(keep, keep) -
                                  spd.submatrix(keep, drop) * inverse(spd.submatrix(drop, drop)) *
                                      spd.submatrix(drop, keep);
        CHECK(schur_complement(spd, keep) == direct);
    }

    Matrix<Rational> bad{{Rational(1), Rational(0)}, {Rational(0), Rational(0)}};
    CHECK_THROWS_AS(schur_complement(bad, {0}), SingularError);
}

TEST_CASE("pfaffian basics") {
    AntisymmetricMatrix<Rational> empty(0);
    CHECK(pfaffian(empty) == Rational(1));

    AntisymmetricMatrix<Rational> one_pair(2);
    one_pair.set(0, 1, Rational(7, 3));
    CHECK(pfaffian(one_pair) == Rational(7, 3));

    AntisymmetricMatrix<Rational> odd(3);
    CHECK_THROWS_AS(pfaffian(odd), ShapeError);
}

TEST_CASE("pfaffian squared equals determinant; elimination agrees with expansion") {
    std::mt19937_64 rng(53);
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        for (int trial = 0; trial < 8; ++trial) {
            auto m = random_antisymmetric<Rational>(n, rng);
            Rational pf = pfaffian(m);
            CHECK(pf * pf == det(m.matrix()));
            CHECK(pf == detail::pfaffian_expansion(m.matrix()));
        }
    }
}

TEST_CASE("pfaffian sign rule: moving last row/column to front with negation") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 6;
        auto m = random_antisymmetric<Rational>(n, rng);
        AntisymmetricMatrix<Rational> moved(n);
        // new index 0 is old n-1 with negated entries; others shift by one
        for (std::size_t j = 1; j < n; ++j) moved.set(0, j, -m(n - 1, j - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) moved.set(i, j, m(i - 1, j - 1));
        CHECK(pfaffian(moved) == pfaffian(m));
    }
}

TEST_CASE("pfaffianoid small cases") {
    AntisymmetricMatrix<MultiPoly> m(3);
    MultiPoly x = MultiPoly::variable(1, 2), y = MultiPoly::variable(1, 3), z = MultiPoly::variable(2, 3);
    m.set(0, 1, x);
    m.set(0, 2, y);
    m.set(1, 2, z);
    CHECK(pfaffianoid(m) == x * z + z * y + y * x);

    AntisymmetricMatrix<Rational> even(4);
    CHECK_THROWS_AS(pfaffianoid(even), ShapeError);
}

TEST_CASE("pfaffianoid expansion equals direct near-pairing sum") {
    std::mt19937_64 rng(89);
    for (std::size_t n : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 4; ++trial) {
            auto m = random_antisymmetric<Rational>(n, rng);
            CHECK(pfaffianoid(m) == groves::testing::pfaffianoid_direct(m));
        }
    }
}

TEST_CASE("kernel-aware solve") {
    // response matrix of a single edge with conductance c = 3/2
    Matrix<Rational> L{{Rational(-3, 2), Rational(3, 2)}, {Rational(3, 2), Rational(-3, 2)}};
    auto x = solve_kernel_aware(L, {Rational(-1), Rational(1)});
    CHECK(L(0, 0) * x[0] + L(0, 1) * x[1] == Rational(-1));
    // inconsistent right side (not orthogonal to the kernel)
    CHECK_THROWS_AS(solve_kernel_aware(L, {Rational(1), Rational(1)}), SingularError);
}

TEST_CASE("tpoly ring") {
    TPoly t = TPoly::t();
    TPoly p = (t - TPoly(Rational(1, 2))) * (t + TPoly(Rational(1, 2)));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == Rational(-1, 4));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(2) == Rational(1));
    CHECK((p - p).is_zero());
}

TEST_CASE("ring identity spot checks under randomized inputs") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
    }
    std::uniform_int_distribution<int> idx(1, 6);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        auto rand_poly = [&]() {
            MultiPoly p(coef(rng));
            for (int k = 0; k < 3; ++k) {
                int i = idx(rng), j = idx(rng);
                if (i != j) p += MultiPoly(coef(rng)) * MultiPoly::variable(i, j);
            }
            return p;
        };
        MultiPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_SUITE_END();
