#ifndef G2HIGGS_DISCRIMINANT_HPP
#define G2HIGGS_DISCRIMINANT_HPP

#include <string>

#include "g2higgs/mpoly.hpp"

namespace g2higgs {

// Discriminant of a*x^4 + b*x^3 + c*x^2 + d*x + e with respect to x, in the
// standard resultant normalization disc = Res(p, p')/a. The input must have
// degree exactly 4 in `var`; the remaining symbols stay as parameters.
inline MPoly univariate_discriminant(const MPoly& p, const std::string& var) {
    if (p.degree(var) != 4)
        throw precondition_error("univariate_discriminant: degree in " + var +
                                 " is " + std::to_string(p.degree(var)) + ", need 4");
    MPoly a = p.coeff_of(var, 4), b = p.coeff_of(var, 3), c = p.coeff_of(var, 2),
          d = p.coeff_of(var, 1), e = p.coeff_of(var, 0);
    MPoly a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d, e2 = e * e;
    return 256 * a2 * a * e2 * e - 192 * a2 * b * d * e2 - 128 * a2 * c2 * e2 +
           144 * a2 * c * d2 * e - 27 * a2 * d2 * d2 + 144 * a * b2 * c * e2 -
           6 * a * b2 * d2 * e - 80 * a * b * c2 * d * e + 18 * a * b * c * d2 * d +
           16 * a * c2 * c2 * e - 4 * a * c2 * c * d2 - 27 * b2 * b2 * e2 +
           18 * b2 * b * c * d * e - 4 * b2 * b * d2 * d - 4 * b2 * c2 * c * e +
           b2 * c2 * d2;
}

}  // namespace g2higgs

#endif
