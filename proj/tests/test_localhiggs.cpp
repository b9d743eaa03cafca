#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "g2higgs/localhiggs.hpp"
#include "test_support.hpp"

using namespace g2higgs;

using MP = MatPoly2<Rational>;
using UP = UPoly<Rational>;

static UP upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long k : coeffs) c.emplace_back(k);
    return UP(std::move(c));
}

// sl2 generators as constant matrix polynomials
static MP H(int tr = 4) { return MP(upoly({1}), UP(), UP(), tr); }
static MP E(int tr = 4) { return MP(UP(), upoly({1}), UP(), tr); }
static MP F(int tr = 4) { return MP(UP(), UP(), upoly({1}), tr); }

TEST_CASE("classify_zero examples") {
    // z * diag(1,-1)
    MP phi1(upoly({0, 1}), UP(), UP(), 4);
    auto c1 = classify_zero(phi1);
    CHECK(c1.order == 1);
    CHECK(c1.derivative_type == DerivativeType::semisimple);
    CHECK(c1.det_phi0 == Rational(-1));
    CHECK(c1.ord_det == 2);

    // z * e: nilpotent, det vanishes beyond truncation
    MP phi2(UP(), upoly({0, 1}), UP(), 4);
    auto c2 = classify_zero(phi2);
    CHECK(c2.order == 1);
    CHECK(c2.derivative_type == DerivativeType::nilpotent);
    CHECK(c2.det_phi0 == Rational(0));
    CHECK_FALSE(c2.ord_det.has_value());

    // [[0, z^2],[1, 0]]: non-vanishing at 0
    MP phi3(UP(), upoly({0, 0, 1}), upoly({1}), 4);
    auto c3 = classify_zero(phi3);
    CHECK(c3.order == 0);
    CHECK_FALSE(c3.derivative_type.has_value());
    CHECK(c3.ord_det == 2);  // det = -z^2

    CHECK_THROWS_WITH(classify_zero(MP(UP(), UP(), UP(), 3)),
                      Catch::Matchers::ContainsSubstring("order exceeds truncation"));
}

TEST_CASE("validate_zero_data") {
    // g=2, one simple semisimple zero
    DimReport r1 = validate_zero_data({2, {{1, DerivativeType::semisimple}}});
    CHECK(r1.degD == 1);
    CHECK(r1.rank == 2);
    CHECK(r1.dim_ker == 4);
    CHECK(r1.dim_critical_locus == 4);
    CHECK(r1.ok);

    // g=2, one order-2 semisimple zero: degD = 2g-2
    DimReport r2 = validate_zero_data({2, {{2, DerivativeType::semisimple}}});
    CHECK(r2.degD == 2);
    CHECK(r2.ok);
    CHECK(r2.dim_critical_locus == 2);

    // g=2, three simple zeros: degD > 2g-2
    DimReport r3 = validate_zero_data({2,
                                       {{1, DerivativeType::semisimple},
                                        {1, DerivativeType::semisimple},
                                        {1, DerivativeType::semisimple}}});
    CHECK_FALSE(r3.ok);
    CHECK(r3.violation == "deg D <= 2g-2 fails");

    // nilpotent zeros tighten the inequality: two simple nilpotents at g=2
    DimReport r4 = validate_zero_data(
        {2, {{1, DerivativeType::nilpotent}, {1, DerivativeType::nilpotent}}});
    CHECK_FALSE(r4.ok);
    CHECK(r4.violation == "4g-4 >= 2 deg D + #nilpotent fails");

    // empty divisor
    DimReport r5 = validate_zero_data({3, {}});
    CHECK_FALSE(r5.ok);
    CHECK(r5.degD == 0);

    CHECK_THROWS_AS(validate_zero_data({1, {}}), precondition_error);
    CHECK_THROWS_AS(validate_zero_data({2, {{0, DerivativeType::semisimple}}}),
                    precondition_error);

    // codimension identity on a sweep
    for (int g = 2; g <= 6; ++g)
        for (int d = 1; d <= 2 * g; ++d) {
            DimReport rep = validate_zero_data({g, {{d, DerivativeType::semisimple}}});
            CHECK(rep.dim_critical_locus + 2 * rep.degD == 6 * g - 6);
        }
}

TEST_CASE("symplectic pairing examples and bilinearity") {
    MP phi = H();
    CHECK(symplectic_pairing(phi, E(), F(), 1) == Rational(-2));
    CHECK(symplectic_pairing(phi, F(), E(), 1) == Rational(2));
    CHECK(symplectic_pairing(phi, E(), phi, 1) == Rational(0));

    std::mt19937_64 rng(31);
    for (int it = 0; it < 40; ++it) {
        int k = 1 + static_cast<int>(rng() % 3);
        int tr = 2 * k + 2;
        MP f = g2test::random_matpoly(rng, tr, false);
        MP p1 = g2test::random_matpoly(rng, tr, false);
        MP p2 = g2test::random_matpoly(rng, tr, false);
        MP p3 = g2test::random_matpoly(rng, tr, false);
        Rational lam = g2test::random_rational(rng);
        CHECK(symplectic_pairing(f, p1, p2, k) == -symplectic_pairing(f, p2, p1, k));
        CHECK(symplectic_pairing(f, p1 + lam * p3, p2, k) ==
              symplectic_pairing(f, p1, p2, k) + lam * symplectic_pairing(f, p3, p2, k));
    }
}

TEST_CASE("hessian residue examples, symmetry, gauge invariance") {
    MP phi = H();
    CHECK(hessian_residue(phi, 0, 1, E(), F()) == Rational(-4));
    CHECK(hessian_residue(phi, 0, 1, E(), E()) == Rational(0));

    std::mt19937_64 rng(37);
    for (int it = 0; it < 40; ++it) {
        int k = 1 + static_cast<int>(rng() % 3);
        int i = static_cast<int>(rng() % k);
        int tr = 2 * k + 2;
        MP f = g2test::random_matpoly(rng, tr, false);
        MP p1 = g2test::random_matpoly(rng, tr, false);
        MP p2 = g2test::random_matpoly(rng, tr, false);
        CHECK(hessian_residue(f, i, k, p1, p2) == hessian_residue(f, i, k, p2, p1));

        // gauge shift: Phidot -> Phidot + [chi, Phi] with Phi = z^k phi
        MP chi = g2test::random_matpoly(rng, tr, false);
        MP Phi = f.shifted(k);
        MP dot1 = commutator(f, p1), dot2 = commutator(f, p2);
        CHECK(hessian_residue_dot(i, k, dot1 + commutator(chi, Phi), dot2) ==
              hessian_residue_dot(i, k, dot1, dot2));
    }
}

TEST_CASE("nondegeneracy worked examples") {
    // k=1, phi(0) = diag(1,-1): X = diag(-2, 2) in the (e,f) complement
    auto rep = nondegeneracy_check(H(), 1);
    CHECK(rep.cartan);
    REQUIRE(rep.operators.size() == 1);
    CHECK(rep.omega(0, 1) == Rational(-2));
    CHECK(rep.omega(1, 0) == Rational(2));
    CHECK(rep.operators[0](0, 0) == Rational(-2));
    CHECK(rep.operators[0](1, 1) == Rational(2));
    CHECK(rep.operators[0](0, 1) == Rational(0));
    CHECK(rep.semisimple[0]);

    // k=1, phi(0) = e: operator [[0,-1],[0,0]] in the (h,f) complement
    auto rep2 = nondegeneracy_check(E(), 1);
    CHECK_FALSE(rep2.cartan);
    REQUIRE(rep2.operators.size() == 1);
    CHECK(rep2.omega(0, 1) == Rational(2));
    CHECK(rep2.operators[0](0, 0) == Rational(0));
    CHECK(rep2.operators[0](0, 1) == Rational(-1));
    CHECK(rep2.operators[0](1, 0) == Rational(0));
    CHECK(rep2.operators[0](1, 1) == Rational(0));
    CHECK_FALSE(rep2.semisimple[0]);
    CHECK(rep2.nilpotent[0]);

    // k=2, semisimple phi(0): the i=1 operator is nilpotent, no Cartan
    std::mt19937_64 rng(41);
    MP phi2 = g2test::random_matpoly(rng, 6, false);
    auto c = classify_zero(phi2.shifted(2));
    REQUIRE(c.derivative_type == DerivativeType::semisimple);
    auto rep3 = nondegeneracy_check(phi2, 2);
    CHECK_FALSE(rep3.cartan);
    CHECK(rep3.nilpotent[1]);

    CHECK_THROWS_AS(nondegeneracy_check(MP(UP(), upoly({0, 1}), UP(), 4), 1),
                    precondition_error);  // phi(0) = 0
}

TEST_CASE("nondegeneracy criterion across randomized models") {
    std::mt19937_64 rng(43);
    for (int k = 1; k <= 3; ++k) {
        for (int it = 0; it < 40; ++it) {
            bool nil = it % 2 == 0;
            MP phi = g2test::random_matpoly(rng, 2 * k + 2, nil);
            auto cls = classify_zero(phi.shifted(k));
            bool expect = (k == 1) && (cls.det_phi0 != Rational(0));
            auto rep = nondegeneracy_check(phi, k);
            CHECK(rep.cartan == expect);
        }
    }
}

TEST_CASE("hecke transform examples") {
    // Phi = z diag(1,-1), alpha = (0:1): unchanged up to the frame
    MP Phi = H(6).shifted(1);
    MP out = hecke_transform(Phi, {Rational(0), Rational(1)});
    auto c = classify_zero(out);
    CHECK(c.order == 1);
    CHECK(c.derivative_type == DerivativeType::semisimple);
    CHECK(trace_product(out, out) == trace_product(Phi, Phi));
    UP tr2 = trace_product(Phi, Phi);
    CHECK(tr2 == upoly({0, 0, 2}));

    // Phi = z [[0,1],[1,0]], generic alpha: characteristic polynomial kept
    MP Phi2(UP(), upoly({0, 1}), upoly({0, 1}), 6);
    MP out2 = hecke_transform(Phi2, {Rational(2), Rational(3)});
    CHECK(trace_product(out2, out2) == trace_product(Phi2, Phi2));

    // order-0 field cannot be lifted
    CHECK_THROWS_WITH(hecke_transform(H(4), {Rational(1), Rational(0)}),
                      Catch::Matchers::ContainsSubstring("vanish"));

    // b'(0) != 0 after transform means the result is non-vanishing at 0
    MP Phi3 = MP(UP(), upoly({1}), upoly({2}), 6).shifted(1);  // phi = [[0,1],[2,0]]
    MP out3 = hecke_transform(Phi3, {Rational(0), Rational(1)});
    auto c3 = classify_zero(out3);
    CHECK(c3.order == 0);
}

TEST_CASE("hecke critical directions") {
    // diag(1,-1): quadratic (0,2,0), roots are the eigenvector directions
    auto hc = hecke_critical_alphas(H());
    CHECK(hc.quadratic == std::array<Rational, 3>{Rational(0), Rational(2), Rational(0)});
    CHECK(hc.disc_is_square);
    REQUIRE(hc.roots.size() == 2);
    // as a set: {(0:1), (1:0)}
    auto is01 = [](const std::pair<QuadExt, QuadExt>& r) {
        return r.first == QuadExt(Rational(0)) && r.second == QuadExt(Rational(1));
    };
    auto is10 = [](const std::pair<QuadExt, QuadExt>& r) {
        return r.first == QuadExt(Rational(1)) && r.second == QuadExt(Rational(0));
    };
    CHECK(((is01(hc.roots[0]) && is10(hc.roots[1])) || (is01(hc.roots[1]) && is10(hc.roots[0]))));

    // [[0,1],[-1,0]]: quadratic (1,0,1), roots (1:+-i)
    MP rot(UP(), upoly({1}), upoly({-1}), 4);
    auto hc2 = hecke_critical_alphas(rot);
    CHECK(hc2.quadratic == std::array<Rational, 3>{Rational(1), Rational(0), Rational(1)});
    CHECK_FALSE(hc2.disc_is_square);
    CHECK(hc2.disc == Rational(-1));
    REQUIRE(hc2.roots.size() == 2);
    QuadExt i = QuadExt::sqrt_of(Rational(-1));
    CHECK(hc2.roots[0].second == i);
    CHECK(hc2.roots[1].second == -i);

    // non-ordinary double point rejected
    MP nil(UP(), upoly({1}), UP(), 4);  // phi(0) = e, a^2+bc = 0
    CHECK_THROWS_WITH(hecke_critical_alphas(nil),
                      Catch::Matchers::ContainsSubstring("not ordinary"));
}

TEST_CASE("hecke at critical roots yields order-1 semisimple zeros") {
    std::mt19937_64 rng(47);
    int ext_cases = 0;
    for (int it = 0; it < 60; ++it) {
        MP phi = g2test::random_matpoly(rng, 6, false);
        if (classify_zero(phi.shifted(1)).det_phi0 == Rational(0)) continue;
        auto hc = hecke_critical_alphas(phi);
        if (!hc.disc_is_square) ++ext_cases;
        MatPoly2<QuadExt> Phi = to_quadext(phi.shifted(1));
        for (const auto& root : hc.roots) {
            auto out = hecke_transform(Phi, root);
            auto cls = classify_zero(out);
            CHECK(cls.order == 1);
            CHECK(cls.derivative_type == DerivativeType::semisimple);
            // characteristic polynomial preserved
            CHECK(trace_product(out, out) == trace_product(Phi, Phi));
        }
    }
    CHECK(ext_cases > 5);  // quadratic-extension roots exercised
}

TEST_CASE("matpoly truncation bookkeeping") {
    MP a(upoly({1, 1}), upoly({2}), upoly({0, 0, 3}), 2);
    MP b = a.shifted(2);
    CHECK(b.truncation() == 2);
    CHECK(b.a().coeff(2) == Rational(1));
    CHECK(b.a().coeff(3) == Rational(0));  // beyond truncation dropped
    CHECK_THROWS_AS(a.unshifted(1), precondition_error);
    CHECK(a.valuation() == 0);
    CHECK(MP(UP(), UP(), UP(), 3).valuation() == std::nullopt);
}
