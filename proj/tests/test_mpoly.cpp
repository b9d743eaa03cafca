#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g2higgs/kummer.hpp"
#include "g2higgs/mpoly.hpp"
#include "test_support.hpp"

using g2higgs::MPoly;
using g2higgs::Rational;

static MPoly v(const std::string& name) { return MPoly::variable(name); }

TEST_CASE("poly arithmetic basics") {
    MPoly z = v("z"), one = MPoly::constant(1);
    CHECK((z + one) * (z - one) == z * z - one);
    std::mt19937_64 rng(1);
    MPoly p = g2test::random_mpoly(rng, {"u0", "eta1"});
    CHECK(p + MPoly() == p);
    MPoly u0 = v("u0"), e0 = v("eta0");
    CHECK((u0 + e0).pow(2) == u0 * u0 + 2 * (u0 * e0) + e0 * e0);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 60; ++it) {
        MPoly a = g2test::random_mpoly(rng, {"u0", "u1", "eta0"});
        MPoly b = g2test::random_mpoly(rng, {"u1", "eta0", "r"});
        MPoly c = g2test::random_mpoly(rng, {"u0", "r"});
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("partial derivative") {
    MPoly u0 = v("u0"), e1 = v("eta1");
    CHECK((u0 * u0 * e1).derivative("u0") == 2 * (u0 * e1));
    CHECK(MPoly::constant(7).derivative("u0").is_zero());
    // derivative with respect to an unused but known symbol
    CHECK((u0 * u0).derivative("eta2").is_zero());
}

TEST_CASE("derivative of the Kummer equation in r matches hand-collected terms") {
    MPoly u0 = v("u0"), u1 = v("u1"), u2 = v("u2");
    MPoly s = v("s"), t = v("t"), one = MPoly::constant(1);
    MPoly expected = -8 * ((s - t + one) * u0 * u1 * u2) -
                     4 * ((s - one) * (u2 * u2 * u0 * u0 + u1 * u1)) +
                     2 * (t * (u0 * u0 * u1 * u1 + u2 * u2));
    CHECK(g2higgs::kummer_polynomial().derivative("r") == expected);
}

TEST_CASE("partial evaluation and full evaluation") {
    MPoly u0 = v("u0"), r = v("r");
    MPoly p = u0 * u0 * r + 3 * u0;
    MPoly q = p.eval_partial({{"r", Rational(2)}});
    CHECK(q == 2 * (u0 * u0) + 3 * u0);
    CHECK(p.eval({{"u0", Rational(1, 2)}, {"r", Rational(2)}}) == Rational(2));
    CHECK_THROWS_AS(p.eval({{"u0", Rational(1)}}), g2higgs::precondition_error);
}

TEST_CASE("serialization is graded-lex with leading terms first") {
    MPoly u0 = v("u0"), u1 = v("u1");
    MPoly p = u0 * u0 - u1 + MPoly::constant(1) + 2 * (u0 * u1 * u1);
    CHECK(p.to_string() == "2*u0*u1^2 + u0^2 - u1 + 1");
    CHECK(MPoly().to_string() == "0");
    CHECK(MPoly::constant(Rational(-3, 7)).to_string() == "-3/7");
}

TEST_CASE("parse round-trips randomized polynomials") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 80; ++it) {
        MPoly p = g2test::random_mpoly(rng, {"u0", "u2", "eta1", "s"}, 5, 4);
        CHECK(MPoly::parse(p.to_string()) == p);
    }
    CHECK(MPoly::parse("1+2z") == MPoly::constant(1) + 2 * v("z"));
    CHECK(MPoly::parse("3 z^2 - z") == 3 * v("z").pow(2) - v("z"));
    CHECK(MPoly::parse("-1/2*u0") == Rational(-1, 2) * v("u0"));
    CHECK_THROWS_AS(MPoly::parse(""), g2higgs::precondition_error);
    CHECK_THROWS_AS(MPoly::parse("+ +"), g2higgs::precondition_error);
}

TEST_CASE("coeff_of and degrees") {
    MPoly x = v("x"), s = v("s");
    MPoly p = s * x.pow(4) + 2 * x - MPoly::constant(5);
    CHECK(p.degree("x") == 4);
    CHECK(p.coeff_of("x", 4) == s);
    CHECK(p.coeff_of("x", 1) == MPoly::constant(2));
    CHECK(p.coeff_of("x", 3).is_zero());
    CHECK(p.total_degree() == 5);
}

TEST_CASE("sign flip parity") {
    MPoly u1 = v("u1"), e1 = v("eta1"), u0 = v("u0");
    MPoly p = u1 * e1 + u0;  // even in the flipped pair
    CHECK(p.sign_flip({"u1", "eta1"}) == p);
    MPoly q = u1 * u0;
    CHECK(q.sign_flip({"u1", "eta1"}) == -q);
}
