#ifndef G2HIGGS_LOCALHIGGS_HPP
#define G2HIGGS_LOCALHIGGS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2higgs/quadext.hpp"
#include "g2higgs/ratmatrix.hpp"
#include "g2higgs/upoly.hpp"

namespace g2higgs {

// Traceless 2x2 matrix [[a,b],[c,-a]] with entries polynomial in a local
// coordinate z, truncated at degree N: coefficients of z^k for k > N are not
// carried and products are reduced modulo z^{N+1}.
template <class K>
class MatPoly2 {
public:
    MatPoly2() : trunc_(1) {}
    MatPoly2(UPoly<K> a, UPoly<K> b, UPoly<K> c, int trunc)
        : a_(a.truncated(trunc)), b_(b.truncated(trunc)), c_(c.truncated(trunc)), trunc_(trunc) {
        if (trunc < 1) throw precondition_error("truncation degree must be >= 1");
    }

    static MatPoly2 from_constant(const K& a, const K& b, const K& c, int trunc) {
        return MatPoly2(UPoly<K>::constant(a), UPoly<K>::constant(b), UPoly<K>::constant(c),
                        trunc);
    }

    const UPoly<K>& a() const { return a_; }
    const UPoly<K>& b() const { return b_; }
    const UPoly<K>& c() const { return c_; }
    int truncation() const { return trunc_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }

    // Smallest z-order appearing in any entry; nullopt when identically zero.
    std::optional<int> valuation() const {
        if (is_zero()) return std::nullopt;
        int v = trunc_ + 1;
        for (const UPoly<K>* p : {&a_, &b_, &c_})
            if (!p->is_zero()) v = std::min(v, p->valuation());
        return v;
    }

    std::array<K, 3> eval0() const { return {a_.coeff(0), b_.coeff(0), c_.coeff(0)}; }

    friend bool operator==(const MatPoly2& x, const MatPoly2& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    MatPoly2 operator-() const { return MatPoly2(-a_, -b_, -c_, trunc_); }
    friend MatPoly2 operator+(const MatPoly2& x, const MatPoly2& y) {
        int tr = std::min(x.trunc_, y.trunc_);
        return MatPoly2(x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, tr);
    }
    friend MatPoly2 operator-(const MatPoly2& x, const MatPoly2& y) { return x + (-y); }
    friend MatPoly2 operator*(const K& k, const MatPoly2& x) {
        return MatPoly2(k * x.a_, k * x.b_, k * x.c_, x.trunc_);
    }

    // Commutator [X,Y]; traceless again. Reduced modulo z^{trunc+1}.
    friend MatPoly2 commutator(const MatPoly2& x, const MatPoly2& y) {
        int tr = std::min(x.trunc_, y.trunc_);
        UPoly<K> a = x.b_ * y.c_ - x.c_ * y.b_;
        UPoly<K> b = 2 * (x.a_ * y.b_ - y.a_ * x.b_);
        UPoly<K> c = 2 * (x.c_ * y.a_ - y.c_ * x.a_);
        return MatPoly2(a.truncated(tr), b.truncated(tr), c.truncated(tr), tr);
    }

    // tr(X Y) = 2 a_x a_y + b_x c_y + c_x b_y, reduced modulo z^{trunc+1}.
    friend UPoly<K> trace_product(const MatPoly2& x, const MatPoly2& y) {
        int tr = std::min(x.trunc_, y.trunc_);
        return (2 * (x.a_ * y.a_) + x.b_ * y.c_ + x.c_ * y.b_).truncated(tr);
    }

    // det = -(a^2 + bc), reduced modulo z^{trunc+1}.
    UPoly<K> det() const { return (-(a_ * a_ + b_ * c_)).truncated(trunc_); }

    MatPoly2 shifted(int k) const {  // multiply by z^k
        return MatPoly2(a_.shifted(k), b_.shifted(k), c_.shifted(k), trunc_);
    }
    MatPoly2 unshifted(int k) const {  // exact division by z^k
        return MatPoly2(a_.unshifted(k), b_.unshifted(k), c_.unshifted(k), trunc_);
    }

    std::string to_string(const std::string& var = "z") const {
        UPoly<K> d = -a_;
        return "[[" + a_.to_string(var) + ", " + b_.to_string(var) + "],[" +
               c_.to_string(var) + ", " + d.to_string(var) + "]]";
    }

private:
    UPoly<K> a_, b_, c_;
    int trunc_;
};

enum class DerivativeType { semisimple, nilpotent };

inline const char* to_string(DerivativeType t) {
    return t == DerivativeType::semisimple ? "semisimple" : "nilpotent";
}

// Zero structure of a local Higgs field Phi = z^k phi with phi(0) != 0.
template <class K>
struct ZeroClassification {
    int order;                                     // k
    std::optional<DerivativeType> derivative_type; // defined for k >= 1
    K det_phi0;                                    // det phi(0)
    std::optional<int> ord_det;                    // nullopt: beyond truncation
};

template <class K>
ZeroClassification<K> classify_zero(const MatPoly2<K>& Phi) {
    auto val = Phi.valuation();
    if (!val) throw precondition_error("order exceeds truncation");
    int k = *val;
    MatPoly2<K> phi = Phi.unshifted(k);
    auto [a0, b0, c0] = phi.eval0();
    K det0 = -(a0 * a0 + b0 * c0);
    ZeroClassification<K> out;
    out.order = k;
    if (k >= 1)
        out.derivative_type =
            (det0 == K(0)) ? DerivativeType::nilpotent : DerivativeType::semisimple;
    out.det_phi0 = det0;
    UPoly<K> d = Phi.det();
    out.ord_det = d.is_zero() ? std::nullopt : std::optional<int>(d.valuation());
    return out;
}

// Divisor data (m_k, type) of a Higgs field's zeros on a genus-g curve.
struct ZeroDataset {
    int genus;
    std::vector<std::pair<int, DerivativeType>> zeros;
};

struct DimReport {
    int degD;
    int rank;                 // 3g-3-degD
    int dim_ker;              // 3g-3+degD
    int dim_critical_locus;   // 6g-6-2 degD
    bool ok;
    std::string violation;    // set when ok is false
};

// Bookkeeping of the rank/dimension formulas for a zero divisor D:
// feasibility needs 4g-4 >= 2 deg D + #nilpotent zeros and 1 <= deg D <= 2g-2.
inline DimReport validate_zero_data(const ZeroDataset& data) {
    if (data.genus < 2) throw precondition_error("genus must be >= 2");
    int g = data.genus;
    int degD = 0, nil = 0;
    for (const auto& [m, type] : data.zeros) {
        if (m < 1) throw precondition_error("zero orders must be >= 1");
        degD += m;
        if (type == DerivativeType::nilpotent) ++nil;
    }
    DimReport rep;
    rep.degD = degD;
    rep.rank = 3 * g - 3 - degD;
    rep.dim_ker = 3 * g - 3 + degD;
    rep.dim_critical_locus = 6 * g - 6 - 2 * degD;
    rep.ok = true;
    if (degD < 1) {
        rep.ok = false;
        rep.violation = "deg D >= 1 fails";
    } else if (degD > 2 * g - 2) {
        rep.ok = false;
        rep.violation = "deg D <= 2g-2 fails";
    } else if (4 * g - 4 < 2 * degD + nil) {
        rep.ok = false;
        rep.violation = "4g-4 >= 2 deg D + #nilpotent fails";
    }
    return rep;
}

// Coefficient of z^{k-1} in tr(psi1 [phi, psi2]): the symplectic form on the
// truncated-loop-algebra orbit (the k=1 case is the coadjoint-orbit form).
template <class K>
K symplectic_pairing(const MatPoly2<K>& phi, const MatPoly2<K>& psi1,
                     const MatPoly2<K>& psi2, int k) {
    if (k < 1) throw precondition_error("symplectic pairing needs k >= 1");
    return trace_product(psi1, commutator(phi, psi2)).coeff(k - 1);
}

// Coefficient of z^{k-1-i} in tr(Phidot1 Phidot2).
template <class K>
K hessian_residue_dot(int i, int k, const MatPoly2<K>& dot1, const MatPoly2<K>& dot2) {
    if (i < 0 || i > k - 1) throw precondition_error("hessian residue needs 0 <= i <= k-1");
    return trace_product(dot1, dot2).coeff(k - 1 - i);
}

// Hessian form of the critical Hamiltonian with localized class z^i:
// coefficient of z^{k-1-i} in tr([phi,psi1][phi,psi2]).
template <class K>
K hessian_residue(const MatPoly2<K>& phi, int i, int k, const MatPoly2<K>& psi1,
                  const MatPoly2<K>& psi2) {
    return hessian_residue_dot(i, k, commutator(phi, psi1), commutator(phi, psi2));
}

struct NondegReport {
    bool cartan;
    std::vector<RatMatrix> operators;   // X_i = Omega^{-1} H_i on the 2k-dim quotient
    RatMatrix omega;
    std::vector<bool> semisimple;
    std::vector<bool> nilpotent;
    bool commuting;
    int span_dim;
    int centralizer_dim;
};

namespace detail_local {

// Basis of sl2[z]/z^k ordered by z-degree, then (a,b,c) slot; "graded-lex".
inline MatPoly2<Rational> basis_element(int index, int k, int trunc) {
    int j = index / 3, slot = index % 3;
    UPoly<Rational> zj = UPoly<Rational>::monomial(Rational(1), j);
    UPoly<Rational> zero;
    switch (slot) {
        case 0: return MatPoly2<Rational>(zj, zero, zero, trunc);
        case 1: return MatPoly2<Rational>(zero, zj, zero, trunc);
        default: return MatPoly2<Rational>(zero, zero, zj, trunc);
    }
}

// Coordinates of M modulo z^k in the basis above.
inline std::vector<Rational> coordinates(const MatPoly2<Rational>& m, int k) {
    std::vector<Rational> v(3 * k, Rational(0));
    for (int j = 0; j < k; ++j) {
        v[3 * j + 0] = m.a().coeff(j);
        v[3 * j + 1] = m.b().coeff(j);
        v[3 * j + 2] = m.c().coeff(j);
    }
    return v;
}

}  // namespace detail_local

// Local nondegeneracy test at a zero of order k with local form Phi = z^k phi.
// Builds E-perp/E as sl2[z]/z^k modulo the centralizer of phi, assembles the
// symplectic form and the k Hessian forms, converts them to operators and
// decides whether they span a Cartan subalgebra of sp(2k).
inline NondegReport nondegeneracy_check(const MatPoly2<Rational>& phi, int k) {
    if (k < 1) throw precondition_error("nondegeneracy check needs k >= 1");
    auto [a0, b0, c0] = phi.eval0();
    if (a0.is_zero() && b0.is_zero() && c0.is_zero())
        throw precondition_error("phi must be non-vanishing at z=0");
    if (phi.truncation() < k) throw precondition_error("truncation too small for k");
    const int n = 3 * k;

    // centralizer of phi: kernel of psi -> [phi, psi] mod z^k
    RatMatrix ad(n, n);
    for (int col = 0; col < n; ++col) {
        auto br = commutator(phi, detail_local::basis_element(col, k, phi.truncation()));
        auto coords = detail_local::coordinates(br, k);
        for (int row = 0; row < n; ++row) ad(row, col) = coords[row];
    }
    RatMatrix cent = nullspace(ad);
    int cdim = static_cast<int>(cent.cols());
    if (cdim != k) throw precondition_error("degenerate local model");

    // complement of the centralizer by graded-lex pivoting
    RatMatrix centT = cent.transpose();
    std::vector<size_t> pivots = rref(centT);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) comp.push_back(j);
    const int m = static_cast<int>(comp.size());  // 2k

    std::vector<MatPoly2<Rational>> basis;
    for (int j : comp) basis.push_back(detail_local::basis_element(j, k, phi.truncation()));

    NondegReport rep;
    rep.centralizer_dim = cdim;
    rep.omega = RatMatrix(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            rep.omega(i, j) = symplectic_pairing(phi, basis[i], basis[j], k);
    RatMatrix om_inv = inverse(rep.omega);  // nondegenerate for phi(0) != 0

    for (int h = 0; h < k; ++h) {
        RatMatrix H(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                H(i, j) = hessian_residue(phi, h, k, basis[i], basis[j]);
        rep.operators.push_back(om_inv * H);
    }

    rep.commuting = true;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rep.operators[i] * rep.operators[j] != rep.operators[j] * rep.operators[i])
                rep.commuting = false;

    for (const auto& X : rep.operators) {
        UPoly<Rational> p = char_poly(X);
        rep.semisimple.push_back(eval_at_matrix(squarefree_part(p), X).is_zero());
        RatMatrix pw = RatMatrix::identity(m);
        for (int e = 0; e < m; ++e) pw = pw * X;
        rep.nilpotent.push_back(pw.is_zero());
    }

    RatMatrix span(k, m * m);
    for (int i = 0; i < k; ++i)
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) span(i, r * m + c) = rep.operators[i](r, c);
    rep.span_dim = exact_rank(span);

    bool all_ss = true;
    for (bool b : rep.semisimple) all_ss = all_ss && b;
    rep.cartan = all_ss && rep.commuting && rep.span_dim == k;
    return rep;
}

// Hecke transform of Phi = z phi at the covector annihilating the direction
// alpha = (u:v): conjugate into the frame where alpha is the reference
// covector (1,0), then change basis to e1 = (z,0), e2 = (0,1). Preserves the
// characteristic polynomial: tr Phi'^2 = tr Phi^2.
template <class K>
MatPoly2<K> hecke_transform(const MatPoly2<K>& Phi, const std::pair<K, K>& alpha) {
    auto val = Phi.valuation();
    if (!val || *val < 1)
        throw precondition_error("Higgs field must vanish at the Hecke point");
    const K& u = alpha.first;
    const K& v = alpha.second;
    if (u == K(0) && v == K(0)) throw precondition_error("alpha must be nonzero");
    MatPoly2<K> phi = Phi.unshifted(1);
    // g = [[x,u],[y,v]] with xv - uy = 1
    K x, y;
    if (!(v == K(0))) {
        x = K(1) / v;
        y = K(0);
    } else {
        x = K(0);
        y = K(0) - K(1) / u;
    }
    const UPoly<K>&A = phi.a(), &B = phi.b(), &C = phi.c();
    auto cp = [](const K& k) { return UPoly<K>::constant(k); };
    UPoly<K> a2 = (cp(v * x + u * y) * A + cp(v * y) * B - cp(u * x) * C);
    UPoly<K> b2 = (cp(K(2) * u * v) * A + cp(v * v) * B - cp(u * u) * C);
    UPoly<K> c2 = (cp(K(0) - K(2) * x * y) * A - cp(y * y) * B + cp(x * x) * C);
    int tr = Phi.truncation();
    return MatPoly2<K>(a2.shifted(1).truncated(tr), b2.truncated(tr),
                       c2.shifted(2).truncated(tr), tr);
}

struct HeckeCritical {
    std::array<Rational, 3> quadratic;  // coefficients of v^2, uv, u^2
    Rational disc;                      // a'(0)^2 + b'(0) c'(0)
    bool disc_is_square;
    std::vector<std::pair<QuadExt, QuadExt>> roots;  // projective pairs (u:v)
};

// The two directions where the Hecke curve meets the critical locus: roots of
// v^2 b'(0) + 2uv a'(0) - u^2 c'(0), over Q or its quadratic extension.
inline HeckeCritical hecke_critical_alphas(const MatPoly2<Rational>& phi) {
    auto [A, B, C] = phi.eval0();
    Rational disc = A * A + B * C;
    if (disc.is_zero()) throw precondition_error("double point not ordinary");
    HeckeCritical out;
    out.quadratic = {B, Rational(2) * A, -C};
    out.disc = disc;
    out.disc_is_square = disc.is_square();
    if (B.is_zero()) {
        // u(2Av - Cu) = 0: roots (0:1) and (2A : C)
        out.roots.emplace_back(QuadExt(Rational(0)), QuadExt(Rational(1)));
        out.roots.emplace_back(QuadExt(Rational(1)), QuadExt(C / (Rational(2) * A)));
    } else {
        QuadExt sq = QuadExt::sqrt_of(disc);
        QuadExt bb{B};
        out.roots.emplace_back(QuadExt(Rational(1)), (QuadExt(-A) + sq) / bb);
        out.roots.emplace_back(QuadExt(Rational(1)), (QuadExt(-A) - sq) / bb);
    }
    return out;
}

// Lift of a rational-entry matrix polynomial into the extension field.
inline MatPoly2<QuadExt> to_quadext(const MatPoly2<Rational>& m) {
    auto lift = [](const UPoly<Rational>& p) {
        std::vector<QuadExt> c;
        for (const auto& k : p.coeffs()) c.emplace_back(k);
        return UPoly<QuadExt>(std::move(c));
    };
    return MatPoly2<QuadExt>(lift(m.a()), lift(m.b()), lift(m.c()), m.truncation());
}

}  // namespace g2higgs

#endif
