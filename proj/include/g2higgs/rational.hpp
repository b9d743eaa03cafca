#ifndef G2HIGGS_RATIONAL_HPP
#define G2HIGGS_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace g2higgs {

// Thrown when an operation's stated precondition is violated (CLI exit code 2).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arbitrary-precision rational scalar. Always canonical: denominator > 0,
// gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw precondition_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw precondition_error("rational with zero denominator");
        v_.canonicalize();
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw precondition_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "num" when the denominator is 1, "num/den" otherwise.
    std::string to_string() const {
        if (den() == 1) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    // Accepts "p", "p/q", optional leading sign and whitespace.
    static std::optional<Rational> parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s += c;
        if (s.empty()) return std::nullopt;
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Rational(mpz_class(s));
            mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
            if (d == 0) return std::nullopt;
            return Rational(n, d);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }

    // True iff the value is the square of a rational.
    bool is_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(num().get_mpz_t()) &&
               mpz_perfect_square_p(den().get_mpz_t());
    }

    // Exact square root; precondition is_square().
    Rational sqrt() const {
        if (!is_square()) throw precondition_error("sqrt of a non-square rational");
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(n, d);
    }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace g2higgs

#endif
