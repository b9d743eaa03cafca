#ifndef G2HIGGS_QUADEXT_HPP
#define G2HIGGS_QUADEXT_HPP

#include <string>

#include "g2higgs/rational.hpp"

namespace g2higgs {

// Element x + y*sqrt(d) of the quadratic extension Q(sqrt(d)), d a non-square
// rational. Values with y = 0 are plain rationals and combine with any d;
// mixing two distinct non-trivial extensions is a precondition error.
// d = -1 gives the Gaussian rationals.
class QuadExt {
public:
    QuadExt() : x_(0), y_(0), d_(0) {}
    QuadExt(long n) : x_(n), y_(0), d_(0) {}
    QuadExt(const Rational& x) : x_(x), y_(0), d_(0) {}
    QuadExt(const Rational& x, const Rational& y, const Rational& d)
        : x_(x), y_(y), d_(d) {
        if (y_.is_zero()) d_ = Rational(0);
    }

    static QuadExt sqrt_of(const Rational& v) {
        if (v.is_square()) return QuadExt(v.sqrt());
        return QuadExt(Rational(0), Rational(1), v);
    }

    const Rational& rational_part() const { return x_; }
    const Rational& surd_part() const { return y_; }
    const Rational& extension() const { return d_; }

    bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
    bool is_rational() const { return y_.is_zero(); }

    QuadExt conj() const { return QuadExt(x_, -y_, d_); }
    Rational norm() const { return x_ * x_ - d_ * y_ * y_; }

    QuadExt operator-() const { return QuadExt(-x_, -y_, d_); }

    friend QuadExt operator+(const QuadExt& a, const QuadExt& b) {
        Rational d = merged_ext(a, b);
        return QuadExt(a.x_ + b.x_, a.y_ + b.y_, d);
    }
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b) { return a + (-b); }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b) {
        Rational d = merged_ext(a, b);
        return QuadExt(a.x_ * b.x_ + d * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_, d);
    }
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b) {
        if (b.is_zero()) throw precondition_error("division by zero");
        Rational d = merged_ext(a, b);
        Rational n = b.norm();
        QuadExt num = a * b.conj();
        return QuadExt(num.x_ / n, num.y_ / n, d);
    }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        if (a.y_.is_zero() && b.y_.is_zero()) return a.x_ == b.x_;
        return a.x_ == b.x_ && a.y_ == b.y_ && a.d_ == b.d_;
    }
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    std::string to_string() const {
        if (y_.is_zero()) return x_.to_string();
        std::string surd = "sqrt(" + d_.to_string() + ")";
        std::string ypart =
            (y_ == Rational(1)) ? surd
            : (y_ == Rational(-1)) ? "-" + surd
                                   : y_.to_string() + "*" + surd;
        if (x_.is_zero()) return ypart;
        if (y_.sign() > 0) return x_.to_string() + "+" + ypart;
        return x_.to_string() + ypart;
    }

private:
    Rational x_, y_, d_;

    static Rational merged_ext(const QuadExt& a, const QuadExt& b) {
        if (a.y_.is_zero()) return b.d_;
        if (b.y_.is_zero()) return a.d_;
        if (a.d_ != b.d_) throw precondition_error("mixing distinct quadratic extensions");
        return a.d_;
    }
};

inline bool is_zero(const QuadExt& q) { return q.is_zero(); }

}  // namespace g2higgs

#endif
