#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g2higgs/ratmatrix.hpp"
#include "test_support.hpp"

using g2higgs::RatMatrix;
using g2higgs::Rational;

TEST_CASE("exact rank examples") {
    CHECK(g2higgs::exact_rank(RatMatrix::identity(3)) == 3);
    CHECK(g2higgs::exact_rank(RatMatrix(3, 6)) == 0);
    RatMatrix m(2, 2);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(4);
    CHECK(g2higgs::exact_rank(m) == 1);
}

TEST_CASE("rank equals rank of transpose on random matrices up to 8x8") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int it = 0; it < 40; ++it) {
        size_t r = dim(rng), c = dim(rng);
        RatMatrix m(r, c);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m(i, j) = g2test::random_rational(rng);
        // plant some row dependencies
        if (r >= 2 && it % 3 == 0)
            for (size_t j = 0; j < c; ++j) m(r - 1, j) = Rational(2) * m(0, j);
        CHECK(g2higgs::exact_rank(m) == g2higgs::exact_rank(m.transpose()));
    }
}

TEST_CASE("rref, nullspace and inverse") {
    RatMatrix m(2, 3);
    m(0, 0) = Rational(1);
    m(0, 1) = Rational(2);
    m(0, 2) = Rational(3);
    m(1, 0) = Rational(2);
    m(1, 1) = Rational(4);
    m(1, 2) = Rational(6);
    RatMatrix ns = g2higgs::nullspace(m);
    CHECK(ns.cols() == 2);
    CHECK((m * ns).is_zero());

    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        RatMatrix a(4, 4);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) a(i, j) = g2test::random_rational(rng);
        if (g2higgs::exact_rank(a) < 4) continue;
        CHECK(g2higgs::inverse(a) * a == RatMatrix::identity(4));
    }
}

TEST_CASE("characteristic polynomial and matrix evaluation") {
    RatMatrix d(2, 2);
    d(0, 0) = Rational(-2);
    d(1, 1) = Rational(2);
    auto p = g2higgs::char_poly(d);  // x^2 - 4
    CHECK(p.coeff(2) == Rational(1));
    CHECK(p.coeff(1) == Rational(0));
    CHECK(p.coeff(0) == Rational(-4));
    CHECK(g2higgs::eval_at_matrix(p, d).is_zero());
    // Cayley-Hamilton on random 5x5
    std::mt19937_64 rng(8);
    RatMatrix a(5, 5);
    for (size_t i = 0; i < 5; ++i)
        for (size_t j = 0; j < 5; ++j) a(i, j) = g2test::random_rational(rng, 3, 2);
    CHECK(g2higgs::eval_at_matrix(g2higgs::char_poly(a), a).is_zero());
}

TEST_CASE("squarefree part detects repeated eigenvalues") {
    using g2higgs::UPoly;
    std::vector<Rational> c = {Rational(1), Rational(2), Rational(1)};  // (x+1)^2
    UPoly<Rational> p(std::move(c));
    UPoly<Rational> sf = squarefree_part(p);
    CHECK(sf.degree() == 1);
    CHECK(sf.coeff(0) == Rational(1));
}
