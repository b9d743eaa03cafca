#ifndef G2HIGGS_GENUS2_HPP
#define G2HIGGS_GENUS2_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2higgs/mpoly.hpp"
#include "g2higgs/ratmatrix.hpp"

namespace g2higgs {

// The fourth bracket of h0 and the eta1 slot of h2's t-bracket admit two
// transcriptions. `printed` keeps the duplicated eta0 factor in h0 and the
// u2^2 term in h2; `corrected` uses eta1 in h0 and u1^2 in h2, and is the
// unique variant whose components Poisson-commute (see commutation_report).
enum class HVariant { printed, corrected };

inline constexpr HVariant kCanonicalVariant = HVariant::corrected;

inline const char* to_string(HVariant v) {
    return v == HVariant::printed ? "printed" : "corrected";
}
inline std::optional<HVariant> parse_variant(const std::string& s) {
    if (s == "printed") return HVariant::printed;
    if (s == "corrected") return HVariant::corrected;
    return std::nullopt;
}

// Branch data (r,s,t) of w^2 = z(z-1)(z-r)(z-s)(z-t); the remaining branch
// points 0, 1, infinity are fixed. All six must be distinct.
struct CurveParams {
    Rational r, s, t;

    void validate() const {
        auto bad = [](const Rational& v) { return v == Rational(0) || v == Rational(1); };
        if (bad(r) || bad(s) || bad(t) || r == s || r == t || s == t)
            throw precondition_error("invalid curve: r,s,t must be distinct and differ from 0,1");
    }
};

template <class K>
struct PhasePointT {
    K u0, u1, u2, e0, e1, e2;
};
using PhasePointQ = PhasePointT<Rational>;
using PhasePointD = PhasePointT<double>;

// Coefficients of (a0 + a1 z + a2 z^2) dz^2 / f(z).
struct QuadDiff {
    Rational a0, a1, a2;
    bool is_zero() const { return a0.is_zero() && a1.is_zero() && a2.is_zero(); }
    friend bool operator==(const QuadDiff& x, const QuadDiff& y) {
        return x.a0 == y.a0 && x.a1 == y.a1 && x.a2 == y.a2;
    }
};

inline const std::array<std::string, 6>& phase_vars() {
    static const std::array<std::string, 6> v = {"u0", "u1", "u2", "eta0", "eta1", "eta2"};
    return v;
}

// The Hamiltonian triple (h0, h1, h2), symbolic in u, eta, r, s, t.
inline const std::array<MPoly, 3>& h_polynomials(HVariant variant) {
    static const auto build = [](HVariant v) {
        MPoly u0 = MPoly::variable("u0"), u1 = MPoly::variable("u1"),
              u2 = MPoly::variable("u2");
        MPoly e0 = MPoly::variable("eta0"), e1 = MPoly::variable("eta1"),
              e2 = MPoly::variable("eta2");
        MPoly r = MPoly::variable("r"), s = MPoly::variable("s"), t = MPoly::variable("t");
        MPoly one = MPoly::constant(1);
        MPoly dot = e0 * u0 + e1 * u1 + e2 * u2;
        auto sq = [](const MPoly& p) { return p * p; };

        MPoly h0_fourth_eta = (v == HVariant::printed) ? e0 : e1;
        MPoly h0 = r * s * t * sq(e0 * (u0 * u0 - one) + e1 * (u0 * u1 + u2) + e2 * (u2 * u0 + u1))
                 - s * t * sq(e0 * (u0 * u1 - u2) + e1 * (u1 * u1 + one) + e2 * (u1 * u2 + u0))
                 + 4 * (r * s * sq(e0 * u0 + e1 * u1))
                 - r * t * sq(e0 * (u0 * u0 + one) + h0_fourth_eta * (u0 * u1 + u2) + e2 * (u2 * u0 - u1));

        MPoly h1 = t * (u0 * u0 + u1 * u1 + u2 * u2 + one) * ((e0 * e0 + e1 * e1 + e2 * e2) + dot * dot)
                 + s * t * (u0 * u0 - u1 * u1 + u2 * u2 - one) * ((e0 * e0 - e1 * e1 + e2 * e2) - dot * dot)
                 + 4 * (r * (u0 * u2 - u1) * (e0 * e2 + dot * e1))
                 + 4 * (s * r * (u2 * u0 + u1) * (e2 * e0 - dot * e1))
                 + 4 * (s * (u1 * u2 + u0) * (e1 * e2 - dot * e0))
                 + 4 * (r * t * (u0 * u1 + u2) * (e0 * e1 - dot * e2));

        MPoly h2_third_u = (v == HVariant::printed) ? u2 * u2 : u1 * u1;
        MPoly h2 = s * sq(e0 * (u2 * u0 + u1) + e1 * (u1 * u2 + u0) + e2 * (u2 * u2 - one))
                 - sq(e0 * (u2 * u0 - u1) + e1 * (u1 * u2 + u0) + e2 * (u2 * u2 + one))
                 - t * sq(e0 * (u0 * u1 + u2) + e2 * (u1 * u2 - u0) + e1 * (h2_third_u + one))
                 + 4 * (r * sq(e1 * u1 + e2 * u2));

        return std::array<MPoly, 3>{h0, h1, h2};
    };
    static const std::array<MPoly, 3> printed = build(HVariant::printed);
    static const std::array<MPoly, 3> corrected = build(HVariant::corrected);
    return variant == HVariant::printed ? printed : corrected;
}

inline std::map<std::string, Rational> phase_assignment(const CurveParams& curve,
                                                        const PhasePointQ& pt) {
    return {{"u0", pt.u0}, {"u1", pt.u1},   {"u2", pt.u2},
            {"eta0", pt.e0}, {"eta1", pt.e1}, {"eta2", pt.e2},
            {"r", curve.r},  {"s", curve.s},  {"t", curve.t}};
}

// F(pt) = (h0, h1, h2) evaluated exactly.
inline QuadDiff eval_F(const CurveParams& curve, const PhasePointQ& pt,
                       HVariant variant = kCanonicalVariant) {
    curve.validate();
    const auto& h = h_polynomials(variant);
    auto a = phase_assignment(curve, pt);
    return QuadDiff{h[0].eval(a), h[1].eval(a), h[2].eval(a)};
}

// Canonical bracket for the one-form eta0 du0 + eta1 du1 + eta2 du2:
// {f,g} = sum_i df/du_i dg/deta_i - df/deta_i dg/du_i.
inline MPoly poisson_bracket(const MPoly& f, const MPoly& g) {
    static const std::array<std::string, 3> us = {"u0", "u1", "u2"};
    static const std::array<std::string, 3> es = {"eta0", "eta1", "eta2"};
    MPoly acc;
    for (int i = 0; i < 3; ++i)
        acc += f.derivative(us[i]) * g.derivative(es[i]) -
               f.derivative(es[i]) * g.derivative(us[i]);
    return acc;
}

struct CommutationReport {
    struct Pair {
        int i, j;
        MPoly bracket;
    };
    HVariant variant;
    std::vector<Pair> pairs;  // {h0,h1}, {h0,h2}, {h1,h2}
    bool all_zero;
    // For each nonzero bracket, its few smallest monomials (graded-lex).
    std::vector<std::string> diagnostics;
};

inline std::string smallest_monomials(const MPoly& p, size_t count = 3) {
    std::vector<std::pair<MPoly::Exponents, Rational>> ts(p.terms().begin(), p.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        return detail::grlex_less(a.first, b.first);
    });
    std::string out;
    for (size_t k = 0; k < std::min(count, ts.size()); ++k) {
        MPoly mono;
        mono = MPoly::constant(ts[k].second);
        for (size_t i = 0; i < p.vars().size(); ++i)
            if (ts[k].first[i] > 0) mono = mono * MPoly::variable(p.vars()[i]).pow(ts[k].first[i]);
        if (!out.empty()) out += ", ";
        out += mono.to_string();
    }
    return out;
}

inline CommutationReport commutation_report(HVariant variant) {
    const auto& h = h_polynomials(variant);
    CommutationReport rep;
    rep.variant = variant;
    rep.pairs = {{0, 1, poisson_bracket(h[0], h[1])},
                 {0, 2, poisson_bracket(h[0], h[2])},
                 {1, 2, poisson_bracket(h[1], h[2])}};
    rep.all_zero = true;
    for (const auto& p : rep.pairs) {
        if (p.bracket.is_zero()) continue;
        rep.all_zero = false;
        rep.diagnostics.push_back("{h" + std::to_string(p.i) + ",h" + std::to_string(p.j) +
                                  "} smallest monomials: " + smallest_monomials(p.bracket));
    }
    return rep;
}

// hi ∘ sigma == hi for the involution sigma below, checked symbolically.
inline bool invariance_check(HVariant variant) {
    static const std::vector<std::string> odd = {"u1", "u2", "eta1", "eta2"};
    for (const auto& h : h_polynomials(variant))
        if (h.sign_flip(odd) != h) return false;
    return true;
}

// (u0,u1,u2,eta0,eta1,eta2) -> (u0,-u1,-u2,eta0,-eta1,-eta2).
template <class K>
PhasePointT<K> involution_apply(const PhasePointT<K>& p) {
    return {p.u0, -p.u1, -p.u2, p.e0, -p.e1, -p.e2};
}

struct RankResult {
    int rank;  // 0..3
    int d;     // corank, 3 - rank
};

// The 3x6 Jacobian [dh_i/d(u,eta)] evaluated at a rational point; exact rank.
inline RankResult jacobian_rank(const CurveParams& curve, const PhasePointQ& pt,
                                HVariant variant = kCanonicalVariant) {
    curve.validate();
    const auto& h = h_polynomials(variant);
    auto a = phase_assignment(curve, pt);
    RatMatrix m(3, 6);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j)
            m(i, j) = h[i].derivative(phase_vars()[j]).eval(a);
    int rank = exact_rank(m);
    return {rank, 3 - rank};
}

// One of the six branch points of the base P^1; nullopt encodes infinity.
using BranchPoint = std::optional<Rational>;

inline std::string branch_to_string(const BranchPoint& b) {
    return b ? b->to_string() : std::string("inf");
}

inline std::array<BranchPoint, 6> branch_points(const CurveParams& curve) {
    return {Rational(0), Rational(1), std::nullopt, curve.r, curve.s, curve.t};
}

// Branch data of the companion genus-2 curve w~^2 = (a z + b) * f(z)/(z - z_{i}):
// the five retained branch points plus the new root -b/a. 1-based index.
inline std::vector<BranchPoint> c1_companion_branch_points(int z1_index, const Rational& a,
                                                           const Rational& b,
                                                           const CurveParams& curve) {
    curve.validate();
    if (z1_index < 1 || z1_index > 6)
        throw precondition_error("branch index must be in 1..6");
    if (a.is_zero())
        throw precondition_error("degenerate companion curve");  // az+b constant: degree drops
    Rational root = -b / a;
    auto all = branch_points(curve);
    std::vector<BranchPoint> out;
    out.push_back(root);
    for (int i = 0; i < 6; ++i) {
        if (i == z1_index - 1) continue;
        if (all[i] && *all[i] == root)
            throw precondition_error("degenerate companion curve");
        out.push_back(all[i]);
    }
    return out;
}

}  // namespace g2higgs

#endif
