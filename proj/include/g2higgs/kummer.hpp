#ifndef G2HIGGS_KUMMER_HPP
#define G2HIGGS_KUMMER_HPP

#include <array>

#include "g2higgs/discriminant.hpp"
#include "g2higgs/genus2.hpp"
#include "g2higgs/mpoly.hpp"

namespace g2higgs {

// The Kummer quartic surface in the affine chart (u0,u1,u2):
//   t(s-1)(u0^4+u1^4+u2^4+1) - 8(r(s-t+1)-s) u0 u1 u2
//   - 2(st+t-2s)(u1^2 u2^2 + u0^2) - 2(s-1)(2r-t)(u2^2 u0^2 + u1^2)
//   + t(2r-(s+1))(u0^2 u1^2 + u2^2) = 0.
inline const MPoly& kummer_polynomial() {
    static const MPoly q = [] {
        MPoly u0 = MPoly::variable("u0"), u1 = MPoly::variable("u1"),
              u2 = MPoly::variable("u2");
        MPoly r = MPoly::variable("r"), s = MPoly::variable("s"), t = MPoly::variable("t");
        MPoly one = MPoly::constant(1);
        MPoly u0_2 = u0 * u0, u1_2 = u1 * u1, u2_2 = u2 * u2;
        return t * (s - one) * (u0_2 * u0_2 + u1_2 * u1_2 + u2_2 * u2_2 + one)
             - 8 * ((r * (s - t + one) - s) * (u0 * u1 * u2))
             - 2 * ((s * t + t - 2 * s) * (u1_2 * u2_2 + u0_2))
             - 2 * ((s - one) * (2 * r - t) * (u2_2 * u0_2 + u1_2))
             + t * (2 * r - (s + one)) * (u0_2 * u1_2 + u2_2);
    }();
    return q;
}

// Homogeneous form with the fourth coordinate u3 restoring the "+1" terms;
// restricting u3 = 1 recovers the affine equation.
inline const MPoly& kummer_polynomial_homogeneous() {
    static const MPoly q = [] {
        MPoly u0 = MPoly::variable("u0"), u1 = MPoly::variable("u1"),
              u2 = MPoly::variable("u2"), u3 = MPoly::variable("u3");
        MPoly r = MPoly::variable("r"), s = MPoly::variable("s"), t = MPoly::variable("t");
        MPoly one = MPoly::constant(1);
        MPoly u0_2 = u0 * u0, u1_2 = u1 * u1, u2_2 = u2 * u2, u3_2 = u3 * u3;
        return t * (s - one) * (u0_2 * u0_2 + u1_2 * u1_2 + u2_2 * u2_2 + u3_2 * u3_2)
             - 8 * ((r * (s - t + one) - s) * (u0 * u1 * u2 * u3))
             - 2 * ((s * t + t - 2 * s) * (u1_2 * u2_2 + u0_2 * u3_2))
             - 2 * ((s - one) * (2 * r - t) * (u2_2 * u0_2 + u1_2 * u3_2))
             + t * (2 * r - (s + one)) * (u0_2 * u1_2 + u2_2 * u3_2);
    }();
    return q;
}

inline Rational kummer_eval(const CurveParams& curve, const std::array<Rational, 3>& u) {
    curve.validate();
    return kummer_polynomial().eval({{"u0", u[0]},
                                     {"u1", u[1]},
                                     {"u2", u[2]},
                                     {"r", curve.r},
                                     {"s", curve.s},
                                     {"t", curve.t}});
}

// y^2 = st(x^2-1)^2 + 4s x^2 - t(x^2+1)^2, expanded as A x^4 + ... + E.
struct EllipticQuartic {
    Rational a, b, c, d, e;
    MPoly as_poly() const {
        MPoly x = MPoly::variable("x");
        return MPoly::constant(a) * x.pow(4) + MPoly::constant(b) * x.pow(3) +
               MPoly::constant(c) * x.pow(2) + MPoly::constant(d) * x + MPoly::constant(e);
    }
};

inline EllipticQuartic c2_fiber_quartic(const Rational& s, const Rational& t) {
    // st(x^2-1)^2 + 4s x^2 - t(x^2+1)^2 = t(s-1) x^4 - 2(st-2s+t) x^2 + t(s-1)
    Rational A = t * (s - Rational(1));
    Rational C = Rational(-2) * (s * t - Rational(2) * s + t);
    return {A, Rational(0), C, Rational(0), A};
}

// Symbolic version, in parameters s, t.
inline MPoly c2_fiber_quartic_poly() {
    MPoly x = MPoly::variable("x"), s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly one = MPoly::constant(1);
    MPoly x2 = x * x;
    return s * t * (x2 - one) * (x2 - one) + 4 * (s * x2) - t * (x2 + one) * (x2 + one);
}

struct DiscriminantIdentity {
    MPoly lhs;   // discriminant of the fiber quartic, as a polynomial in s,t
    MPoly rhs;   // 4096 s^2 t^2 (s-1)^2 (s-t)^2 (t-1)^2
    bool equal;
};

inline DiscriminantIdentity c2_discriminant_identity() {
    MPoly s = MPoly::variable("s"), t = MPoly::variable("t");
    MPoly one = MPoly::constant(1);
    MPoly lhs = univariate_discriminant(c2_fiber_quartic_poly(), "x");
    MPoly rhs = 4096 * (s * s) * (t * t) * (s - one).pow(2) * (s - t).pow(2) * (t - one).pow(2);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace g2higgs

#endif
