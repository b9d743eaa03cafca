#ifndef G2HIGGS_NUMERIC_HPP
#define G2HIGGS_NUMERIC_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "g2higgs/genus2.hpp"
#include "g2higgs/kummer.hpp"

namespace g2higgs {

// Polynomial baked down to flat (coefficient, exponent-row) form over a fixed
// variable layout, for fast double evaluation in solver loops.
class CompiledPoly {
public:
    CompiledPoly() = default;
    CompiledPoly(const MPoly& p, const std::vector<std::string>& layout,
                 const std::map<std::string, Rational>& fixed = {}) {
        MPoly q = p.eval_partial(fixed);
        nvars_ = layout.size();
        std::vector<int> pos(q.vars().size(), -1);
        for (size_t i = 0; i < q.vars().size(); ++i) {
            for (size_t j = 0; j < layout.size(); ++j)
                if (q.vars()[i] == layout[j]) pos[i] = static_cast<int>(j);
            if (pos[i] < 0) throw precondition_error("CompiledPoly: unbound variable " + q.vars()[i]);
        }
        for (const auto& [e, c] : q.terms()) {
            coeffs_.push_back(c.to_double());
            std::vector<int> row(nvars_, 0);
            for (size_t i = 0; i < e.size(); ++i) row[pos[i]] = e[i];
            exps_.push_back(std::move(row));
        }
    }

    double eval(const double* x) const {
        double acc = 0;
        for (size_t t = 0; t < coeffs_.size(); ++t) {
            double v = coeffs_[t];
            const auto& e = exps_[t];
            for (size_t i = 0; i < nvars_; ++i)
                for (int k = 0; k < e[i]; ++k) v *= x[i];
            acc += v;
        }
        return acc;
    }

private:
    size_t nvars_ = 0;
    std::vector<double> coeffs_;
    std::vector<std::vector<int>> exps_;
};

// F, its Jacobian, and the Jacobian's derivatives for one curve, compiled to
// doubles over the 6 phase variables.
class CompiledSystem {
public:
    CompiledSystem(const CurveParams& curve, HVariant variant) {
        curve.validate();
        std::map<std::string, Rational> fixed = {
            {"r", curve.r}, {"s", curve.s}, {"t", curve.t}};
        std::vector<std::string> layout(phase_vars().begin(), phase_vars().end());
        const auto& h = h_polynomials(variant);
        for (int i = 0; i < 3; ++i) {
            f_[i] = CompiledPoly(h[i], layout, fixed);
            for (int j = 0; j < 6; ++j) {
                MPoly dj = h[i].derivative(layout[j]);
                jac_[i][j] = CompiledPoly(dj, layout, fixed);
                for (int k = 0; k < 6; ++k)
                    hess_[i][j][k] = CompiledPoly(dj.derivative(layout[k]), layout, fixed);
            }
        }
    }

    Eigen::Vector3d F(const Eigen::Matrix<double, 6, 1>& x) const {
        Eigen::Vector3d v;
        for (int i = 0; i < 3; ++i) v(i) = f_[i].eval(x.data());
        return v;
    }
    Eigen::Matrix<double, 3, 6> J(const Eigen::Matrix<double, 6, 1>& x) const {
        Eigen::Matrix<double, 3, 6> m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = jac_[i][j].eval(x.data());
        return m;
    }
    // dJ/dx_k
    Eigen::Matrix<double, 3, 6> dJ(const Eigen::Matrix<double, 6, 1>& x, int k) const {
        Eigen::Matrix<double, 3, 6> m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 6; ++j) m(i, j) = hess_[i][j][k].eval(x.data());
        return m;
    }

private:
    CompiledPoly f_[3];
    CompiledPoly jac_[3][6];
    CompiledPoly hess_[3][6][6];
};

// Corank of the numeric 3x6 Jacobian: singular values below tol * sigma_max.
inline RankResult jacobian_rank_numeric(const CurveParams& curve, const PhasePointD& pt,
                                        HVariant variant = kCanonicalVariant,
                                        double tol = 1e-8) {
    CompiledSystem sys(curve, variant);
    Eigen::Matrix<double, 6, 1> x;
    x << pt.u0, pt.u1, pt.u2, pt.e0, pt.e1, pt.e2;
    Eigen::JacobiSVD<Eigen::Matrix<double, 3, 6>> svd(sys.J(x));
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    if (sv(0) == 0.0) rank = 0;
    return {rank, 3 - rank};
}

struct FiberSolveOptions {
    int seeds = 100;
    double tol = 1e-8;          // acceptance bound on ||F - target||
    std::uint64_t seed = 0;     // RNG seed for the restarts
    double seed_scale = 1.5;    // std-dev of the Gaussian seed cloud
    int max_iter_bias = 250;    // stage on (F - target, det(J J^T))
    int max_iter_polish = 80;   // stage on (F - target)
    double crit_weight = 1.0;   // weight of the det(J J^T) residual
};

namespace detail_numeric {

using Vec6 = Eigen::Matrix<double, 6, 1>;

inline double det_g_and_grad(const CompiledSystem& sys, const Vec6& x,
                             Eigen::Matrix<double, 6, 1>* grad) {
    Eigen::Matrix<double, 3, 6> Jm = sys.J(x);
    Eigen::Matrix3d G = Jm * Jm.transpose();
    Eigen::Matrix3d adj;
    adj << G(1, 1) * G(2, 2) - G(1, 2) * G(2, 1), G(0, 2) * G(2, 1) - G(0, 1) * G(2, 2),
        G(0, 1) * G(1, 2) - G(0, 2) * G(1, 1), G(1, 2) * G(2, 0) - G(1, 0) * G(2, 2),
        G(0, 0) * G(2, 2) - G(0, 2) * G(2, 0), G(0, 2) * G(1, 0) - G(0, 0) * G(1, 2),
        G(1, 0) * G(2, 1) - G(1, 1) * G(2, 0), G(0, 1) * G(2, 0) - G(0, 0) * G(2, 1),
        G(0, 0) * G(1, 1) - G(0, 1) * G(1, 0);
    if (grad) {
        for (int k = 0; k < 6; ++k) {
            Eigen::Matrix<double, 3, 6> dJ = sys.dJ(x, k);
            Eigen::Matrix3d dG = dJ * Jm.transpose() + Jm * dJ.transpose();
            (*grad)(k) = (adj.transpose().array() * dG.array()).sum();
        }
    }
    return G.determinant();
}

// Levenberg-Marquardt on a generic residual; ResidFn(x, r, J) fills r and J.
template <int NR, class ResidFn>
Vec6 levenberg_marquardt(const ResidFn& fn, Vec6 x, int iters, double stop_norm) {
    Eigen::Matrix<double, NR, 1> r, r2;
    Eigen::Matrix<double, NR, 6> J, J2;
    fn(x, r, J);
    double n = r.norm(), lambda = 1e-3;
    for (int it = 0; it < iters && n > stop_norm; ++it) {
        Eigen::Matrix<double, 6, 6> A = J.transpose() * J;
        double mu = lambda * std::max(1e-8, A.trace() / 6.0);
        Vec6 dx = (A + mu * Eigen::Matrix<double, 6, 6>::Identity())
                      .ldlt()
                      .solve(-J.transpose() * r);
        Vec6 x2 = x + dx;
        fn(x2, r2, J2);
        double n2 = r2.norm();
        if (n2 < n) {
            x = x2;
            r = r2;
            J = J2;
            n = n2;
            lambda = std::max(lambda * 0.35, 1e-14);
        } else {
            lambda = std::min(lambda * 8.0, 1e13);
            if (lambda >= 1e13) break;
        }
    }
    return x;
}

}  // namespace detail_numeric

// One damped least-squares run from an explicit start point. Stage one works
// on the augmented residual (F - target, w * det(J J^T)), which is attracted
// to rank-deficient points of the fiber when the target has them; stage two
// polishes on (F - target) alone so the returned point meets the tolerance.
inline std::optional<PhasePointD> fiber_solve_from(const CompiledSystem& sys,
                                                   const std::array<double, 3>& target,
                                                   const PhasePointD& start,
                                                   const FiberSolveOptions& opt) {
    using detail_numeric::Vec6;
    Vec6 x;
    x << start.u0, start.u1, start.u2, start.e0, start.e1, start.e2;
    Eigen::Vector3d tgt(target[0], target[1], target[2]);
    double w = opt.crit_weight;

    auto biased = [&](const Vec6& p, Eigen::Matrix<double, 4, 1>& r,
                      Eigen::Matrix<double, 4, 6>& J) {
        Eigen::Matrix<double, 6, 1> g;
        double dg = detail_numeric::det_g_and_grad(sys, p, &g);
        r.head<3>() = sys.F(p) - tgt;
        r(3) = w * dg;
        J.topRows<3>() = sys.J(p);
        J.row(3) = w * g.transpose();
    };
    auto plain = [&](const Vec6& p, Eigen::Matrix<double, 3, 1>& r,
                     Eigen::Matrix<double, 3, 6>& J) {
        r = sys.F(p) - tgt;
        J = sys.J(p);
    };

    if (w > 0)
        x = detail_numeric::levenberg_marquardt<4>(biased, x, opt.max_iter_bias, 1e-15);
    x = detail_numeric::levenberg_marquardt<3>(plain, x, opt.max_iter_polish, 1e-14);

    if ((sys.F(x) - tgt).norm() > opt.tol) return std::nullopt;
    return PhasePointD{x(0), x(1), x(2), x(3), x(4), x(5)};
}

// Random-restart fiber solver; returns every converged point (one per seed).
inline std::vector<PhasePointD> fiber_solve(const CurveParams& curve,
                                            const std::array<double, 3>& target,
                                            const FiberSolveOptions& opt,
                                            HVariant variant = kCanonicalVariant) {
    if (opt.tol <= 0) throw precondition_error("fiber_solve: tol must be positive");
    CompiledSystem sys(curve, variant);
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, opt.seed_scale);
    std::vector<PhasePointD> out;
    for (int sdx = 0; sdx < opt.seeds; ++sdx) {
        PhasePointD start{gauss(rng), gauss(rng), gauss(rng),
                          gauss(rng), gauss(rng), gauss(rng)};
        if (auto pt = fiber_solve_from(sys, target, start, opt)) out.push_back(*pt);
    }
    return out;
}

struct SingularSearchOptions {
    int seeds = 400;
    double tol = 1e-9;          // residual bounds |Q| and ||grad Q||
    std::uint64_t seed = 0;
    double seed_scale = 1.5;
    int max_iter = 200;
    double dedup_radius = 1e-4;
};

struct SingularPoint {
    std::array<double, 3> u;
    double q_residual;
    double grad_residual;
};

// Best-effort numeric search for nodes of the Kummer quartic in the affine
// chart: damped Newton on (Q, dQ/du) from random seeds, deduplicated, then
// closed up under the (u1,u2) -> (-u1,-u2) symmetry of Q.
inline std::vector<SingularPoint> kummer_singular_search(const CurveParams& curve,
                                                         const SingularSearchOptions& opt) {
    curve.validate();
    if (opt.tol <= 0) throw precondition_error("singular search: tol must be positive");
    std::map<std::string, Rational> fixed = {{"r", curve.r}, {"s", curve.s}, {"t", curve.t}};
    std::vector<std::string> layout = {"u0", "u1", "u2"};
    const MPoly& Q = kummer_polynomial();
    CompiledPoly q(Q, layout, fixed);
    CompiledPoly dq[3], d2q[3][3];
    for (int i = 0; i < 3; ++i) {
        MPoly di = Q.derivative(layout[i]);
        dq[i] = CompiledPoly(di, layout, fixed);
        for (int j = 0; j < 3; ++j) d2q[i][j] = CompiledPoly(di.derivative(layout[j]), layout, fixed);
    }

    using Vec3 = Eigen::Vector3d;
    auto resid = [&](const Vec3& x, Eigen::Vector4d& r, Eigen::Matrix<double, 4, 3>& J) {
        r(0) = q.eval(x.data());
        for (int i = 0; i < 3; ++i) r(i + 1) = dq[i].eval(x.data());
        for (int j = 0; j < 3; ++j) J(0, j) = r(j + 1);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) J(i + 1, j) = d2q[i][j].eval(x.data());
    };
    auto refine = [&](Vec3 x) -> std::optional<Vec3> {
        Eigen::Vector4d r, r2;
        Eigen::Matrix<double, 4, 3> J, J2;
        resid(x, r, J);
        double n = r.norm(), lambda = 1e-3;
        for (int it = 0; it < opt.max_iter && n > 1e-14; ++it) {
            Eigen::Matrix3d A = J.transpose() * J;
            double mu = lambda * std::max(1e-8, A.trace() / 3.0);
            Vec3 dx = (A + mu * Eigen::Matrix3d::Identity()).ldlt().solve(-J.transpose() * r);
            Vec3 x2 = x + dx;
            resid(x2, r2, J2);
            if (r2.norm() < n) {
                x = x2; r = r2; J = J2; n = r2.norm();
                lambda = std::max(lambda * 0.35, 1e-14);
            } else {
                lambda = std::min(lambda * 8.0, 1e13);
                if (lambda >= 1e13) break;
            }
        }
        double qv = std::abs(q.eval(x.data()));
        Vec3 g;
        for (int i = 0; i < 3; ++i) g(i) = dq[i].eval(x.data());
        if (qv <= opt.tol && g.norm() <= opt.tol) return x;
        return std::nullopt;
    };

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> gauss(0.0, opt.seed_scale);
    std::vector<Vec3> found;
    auto add_point = [&](const Vec3& x) {
        for (const auto& y : found)
            if ((x - y).norm() < opt.dedup_radius) return;
        found.push_back(x);
    };
    for (int sdx = 0; sdx < opt.seeds; ++sdx) {
        Vec3 x0(gauss(rng), gauss(rng), gauss(rng));
        if (auto x = refine(x0)) add_point(*x);
    }
    // mirror closure: a node's mirror is a node; refine from it so the
    // returned set is symmetric under (u1,u2) -> (-u1,-u2)
    for (size_t i = 0; i < found.size(); ++i) {
        Vec3 m(found[i](0), -found[i](1), -found[i](2));
        if (auto x = refine(m)) add_point(*x);
    }

    std::vector<SingularPoint> out;
    for (const auto& x : found) {
        Vec3 g;
        for (int i = 0; i < 3; ++i) g(i) = dq[i].eval(x.data());
        out.push_back({{x(0), x(1), x(2)}, std::abs(q.eval(x.data())), g.norm()});
    }
    std::sort(out.begin(), out.end(), [](const SingularPoint& a, const SingularPoint& b) {
        return a.u < b.u;
    });
    return out;
}

}  // namespace g2higgs

#endif
