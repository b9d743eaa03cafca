#ifndef G2HIGGS_MPOLY_HPP
#define G2HIGGS_MPOLY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "g2higgs/rational.hpp"

namespace g2higgs {

// Global variable precedence: the named phase-space/parameter symbols first,
// anything else after them in lexicographic order.
inline int variable_precedence(const std::string& name) {
    static const std::vector<std::string> fixed = {
        "u0", "u1", "u2", "eta0", "eta1", "eta2", "r", "s", "t", "z", "x", "w"};
    for (size_t i = 0; i < fixed.size(); ++i)
        if (fixed[i] == name) return static_cast<int>(i);
    return static_cast<int>(fixed.size());
}

inline bool variable_less(const std::string& a, const std::string& b) {
    int pa = variable_precedence(a), pb = variable_precedence(b);
    if (pa != pb) return pa < pb;
    return a < b;
}

// Multivariate polynomial with Rational coefficients over named variables.
// Exponent vectors align to the ordered variable list; no zero terms stored;
// unused variables are dropped, so equality is representation-independent.
class MPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    MPoly() = default;

    static MPoly constant(const Rational& c) {
        MPoly p;
        if (!c.is_zero()) p.terms_[{}] = c;
        return p;
    }
    static MPoly constant(long c) { return constant(Rational(c)); }

    static MPoly variable(const std::string& name) {
        MPoly p;
        p.vars_ = {name};
        p.terms_[{1}] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw precondition_error("MPoly is not constant");
        return terms_.begin()->second;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
        auto [ua, ub] = aligned(a, b);
        return ua.terms_ == ub.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly operator-() const {
        MPoly p(*this);
        for (auto& [e, c] : p.terms_) c = -c;
        return p;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        auto [ua, ub] = aligned(a, b);
        for (const auto& [e, c] : ub.terms_) {
            auto it = ua.terms_.find(e);
            if (it == ua.terms_.end()) {
                ua.terms_.emplace(e, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) ua.terms_.erase(it);
            }
        }
        ua.compact();
        return ua;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return MPoly();
        auto [ua, ub] = aligned(a, b);
        MPoly out;
        out.vars_ = ua.vars_;
        Exponents e(ua.vars_.size());
        for (const auto& [ea, ca] : ua.terms_) {
            for (const auto& [eb, cb] : ub.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                Rational prod = ca * cb;
                auto it = out.terms_.find(e);
                if (it == out.terms_.end()) {
                    out.terms_.emplace(e, prod);
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        }
        out.compact();
        return out;
    }

    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend MPoly operator*(const Rational& c, const MPoly& p) { return MPoly::constant(c) * p; }
    friend MPoly operator*(long c, const MPoly& p) { return MPoly::constant(c) * p; }

    MPoly pow(int n) const {
        if (n < 0) throw precondition_error("negative polynomial power");
        MPoly out = constant(1), base = *this;
        while (n > 0) {
            if (n & 1) out = out * base;
            base = (n >>= 1) ? base * base : base;
        }
        return out;
    }

    // Formal partial derivative; the symbol must be known somewhere in the
    // global order but need not occur (then the derivative is 0).
    MPoly derivative(const std::string& var) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == var) idx = i;
        if (idx == vars_.size()) return MPoly();
        MPoly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents e2 = e;
            e2[idx] -= 1;
            out.terms_[e2] = c * Rational(e[idx]);
        }
        out.compact();
        return out;
    }

    int degree(const std::string& var) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == var) idx = i;
        if (idx == vars_.size()) return 0;
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
        return d;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    // Coefficient of var^k, as a polynomial in the remaining variables.
    MPoly coeff_of(const std::string& var, int k) const {
        size_t idx = vars_.size();
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == var) idx = i;
        if (idx == vars_.size()) return k == 0 ? *this : MPoly();
        MPoly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            if (e[idx] != k) continue;
            Exponents e2 = e;
            e2[idx] = 0;
            out.terms_[e2] = c;
        }
        out.compact();
        return out;
    }

    // Substitute rational constants for a subset of the variables.
    MPoly eval_partial(const std::map<std::string, Rational>& assign) const {
        MPoly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            Rational coef = c;
            Exponents e2 = e;
            for (size_t i = 0; i < vars_.size(); ++i) {
                auto it = assign.find(vars_[i]);
                if (it == assign.end() || e[i] == 0) continue;
                Rational p(1);
                for (int k = 0; k < e[i]; ++k) p *= it->second;
                coef *= p;
                e2[i] = 0;
            }
            if (coef.is_zero()) continue;
            auto it = out.terms_.find(e2);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e2, coef);
            } else {
                it->second += coef;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        out.compact();
        return out;
    }

    Rational eval(const std::map<std::string, Rational>& assign) const {
        MPoly v = eval_partial(assign);
        if (!v.is_constant())
            throw precondition_error("eval: unassigned variable remains");
        return v.constant_value();
    }

    double eval_double(const std::map<std::string, double>& assign) const {
        double acc = 0;
        for (const auto& [e, c] : terms_) {
            double term = c.to_double();
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (e[i] == 0) continue;
                auto it = assign.find(vars_[i]);
                if (it == assign.end())
                    throw precondition_error("eval_double: unassigned variable " + vars_[i]);
                for (int k = 0; k < e[i]; ++k) term *= it->second;
            }
            acc += term;
        }
        return acc;
    }

    // Substitute var -> -var for each listed variable.
    MPoly sign_flip(const std::vector<std::string>& flip) const {
        MPoly out;
        out.vars_ = vars_;
        for (const auto& [e, c] : terms_) {
            int parity = 0;
            for (size_t i = 0; i < vars_.size(); ++i)
                if (e[i] % 2 != 0 &&
                    std::find(flip.begin(), flip.end(), vars_[i]) != flip.end())
                    parity ^= 1;
            out.terms_[e] = parity ? -c : c;
        }
        return out;
    }

    // Canonical text form: graded-lex on exponent vectors, leading terms first.
    std::string to_string() const;
    static MPoly parse(const std::string& text);

private:
    std::vector<std::string> vars_;  // sorted by variable_less
    TermMap terms_;

    void compact() {
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < vars_.size(); ++i)
                if (e[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        std::vector<std::string> nv;
        for (size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) nv.push_back(vars_[i]);
        TermMap nt;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            ne.reserve(nv.size());
            for (size_t i = 0; i < vars_.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            nt.emplace(std::move(ne), c);
        }
        vars_ = std::move(nv);
        terms_ = std::move(nt);
    }

    MPoly embedded(const std::vector<std::string>& vars) const {
        MPoly out;
        out.vars_ = vars;
        std::vector<size_t> pos(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(vars.begin(), vars.end(), vars_[i]);
            pos[i] = static_cast<size_t>(it - vars.begin());
        }
        for (const auto& [e, c] : terms_) {
            Exponents ne(vars.size(), 0);
            for (size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
            out.terms_.emplace(std::move(ne), c);
        }
        return out;
    }

    static std::pair<MPoly, MPoly> aligned(const MPoly& a, const MPoly& b) {
        if (a.vars_ == b.vars_) return {a, b};
        std::vector<std::string> u;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(u), variable_less);
        return {a.embedded(u), b.embedded(u)};
    }
};

namespace detail {

inline bool grlex_less(const MPoly::Exponents& a, const MPoly::Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

}  // namespace detail

inline std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const Exponents, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) {
        return detail::grlex_less(b->first, a->first);  // descending
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool monomial_trivial =
            std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
        bool coeff_one = (a == Rational(1));
        if (!coeff_one || monomial_trivial) os << a.to_string();
        bool printed = !coeff_one || monomial_trivial;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

// Parses the output of to_string (and common variants: optional '*' between
// coefficient and variables, juxtaposition with whitespace, '^' powers).
inline MPoly MPoly::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto fail = [&](const std::string& why) -> MPoly {
        throw precondition_error("MPoly parse error at position " + std::to_string(i) + ": " + why);
    };
    MPoly acc;
    bool expect_term = true;
    int pending_sign = +1;
    skip_ws();
    if (i >= text.size()) fail("empty input");
    while (i < text.size()) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') pending_sign = -pending_sign;
            else if (expect_term && c == '+') {}
            else { expect_term = true; pending_sign = (c == '-') ? -1 : 1; }
            ++i;
            continue;
        }
        // one term: optional coefficient, then variable factors
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/')) ++j;
            auto r = Rational::parse(text.substr(i, j - i));
            if (!r) fail("bad coefficient");
            coef = *r;
            i = j;
            have_coef = true;
        }
        std::map<std::string, int> exps;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
            if (i >= text.size() || !std::isalpha(static_cast<unsigned char>(text[i]))) break;
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string name = text.substr(i, j - i);
            i = j;
            int p = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                if (k == i) fail("missing exponent");
                p = std::stoi(text.substr(i, k - i));
                i = k;
            }
            exps[name] += p;
        }
        if (!have_coef && exps.empty()) fail("expected a term");
        MPoly term = MPoly::constant(pending_sign < 0 ? -coef : coef);
        for (const auto& [name, p] : exps) term = term * MPoly::variable(name).pow(p);
        acc = acc + term;
        expect_term = false;
        pending_sign = 1;
    }
    return acc;
}

}  // namespace g2higgs

#endif
