#ifndef G2HIGGS_UPOLY_HPP
#define G2HIGGS_UPOLY_HPP

#include <string>
#include <vector>

#include "g2higgs/rational.hpp"

namespace g2higgs {

// Dense univariate polynomial over a field K (K = Rational or QuadExt here).
// coeffs_[i] is the coefficient of z^i; trailing zeros are trimmed.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }
    static UPoly monomial(const K& k, int deg) {
        std::vector<K> c(deg + 1, K(0));
        c[deg] = k;
        return UPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return K(0);
        return c_[i];
    }
    const std::vector<K>& coeffs() const { return c_; }

    // Smallest i with nonzero coefficient, or -1 for the zero polynomial.
    int valuation() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!is_zero_value(c_[i])) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

    UPoly operator-() const {
        UPoly p(*this);
        for (auto& k : p.c_) k = -k;
        return p;
    }
    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> c(std::max(a.c_.size(), b.c_.size()), K(0));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] = c[i] + a.c_[i];
            if (i < b.c_.size()) c[i] = c[i] + b.c_[i];
        }
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const K& k, const UPoly& p) { return UPoly::constant(k) * p; }

    UPoly truncated(int max_deg) const {
        if (degree() <= max_deg) return *this;
        std::vector<K> c(c_.begin(), c_.begin() + max_deg + 1);
        return UPoly(std::move(c));
    }

    UPoly shifted(int k) const {  // multiply by z^k
        if (is_zero()) return UPoly();
        std::vector<K> c(c_.size() + k, K(0));
        for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return UPoly(std::move(c));
    }

    // Exact division by z^k; precondition: valuation >= k (or zero poly).
    UPoly unshifted(int k) const {
        if (is_zero()) return UPoly();
        if (valuation() < k) throw precondition_error("polynomial not divisible by z^k");
        std::vector<K> c(c_.begin() + k, c_.end());
        return UPoly(std::move(c));
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<K> c(c_.size() - 1, K(0));
        for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = K(static_cast<long>(i)) * c_[i];
        return UPoly(std::move(c));
    }

    K eval(const K& x) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Euclidean division; the divisor's leading coefficient must be invertible.
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw precondition_error("polynomial division by zero");
        UPoly rem = a;
        std::vector<K> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1, K(0));
        K lead = b.c_.back();
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            int d = rem.degree() - b.degree();
            K f = rem.c_.back() / lead;
            q[d] = q[d] + f;
            rem = rem - (f * b).shifted(d);
        }
        return {UPoly(std::move(q)), rem};
    }

    // Monic gcd.
    friend UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            auto [q, r] = divmod(a, b);
            a = b;
            b = r;
        }
        if (a.is_zero()) return a;
        K inv = K(1) / a.c_.back();
        return inv * a;
    }

    // p / gcd(p, p'): same roots, all simple.
    friend UPoly squarefree_part(const UPoly& p) {
        if (p.is_zero()) return p;
        UPoly g = gcd(p, p.derivative());
        return divmod(p, g).first;
    }

    std::string to_string(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (is_zero_value(c_[i])) continue;
            if (!out.empty()) out += " + ";
            out += c_[i].to_string();
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    std::vector<K> c_;

    static bool is_zero_value(const K& k) { return k == K(0); }

    void trim() {
        while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
    }
};

}  // namespace g2higgs

#endif
