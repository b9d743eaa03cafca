#ifndef G2HIGGS_RATMATRIX_HPP
#define G2HIGGS_RATMATRIX_HPP

#include <vector>

#include "g2higgs/rational.hpp"
#include "g2higgs/upoly.hpp"

namespace g2higgs {

// Dense matrix of exact rationals.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(size_t n) {
        RatMatrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Rational& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    RatMatrix transpose() const {
        RatMatrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols_ != b.rows_) throw precondition_error("matrix dimension mismatch");
        RatMatrix m(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j)
                    m(i, j) += a(i, k) * b(k, j);
            }
        return m;
    }
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw precondition_error("matrix dimension mismatch");
        RatMatrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
        return m;
    }
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw precondition_error("matrix dimension mismatch");
        RatMatrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
        return m;
    }
    friend RatMatrix operator*(const Rational& c, const RatMatrix& a) {
        RatMatrix m(a.rows_, a.cols_);
        for (size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = c * a.a_[i];
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Exact rank over Q by fraction-free (Bareiss) elimination: rows are scaled
// to integers, then eliminated with exact integer divisions only.
inline int exact_rank(const RatMatrix& m) {
    size_t R = m.rows(), C = m.cols();
    if (R == 0 || C == 0) return 0;
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    int rank = 0;
    mpz_class prev = 1;
    size_t row = 0;
    for (size_t col = 0; col < C && row < R; ++col) {
        size_t piv = row;
        while (piv < R && a[piv][col] == 0) ++piv;
        if (piv == R) continue;
        std::swap(a[piv], a[row]);
        for (size_t i = row + 1; i < R; ++i) {
            for (size_t j = col + 1; j < C; ++j) {
                mpz_class x = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<size_t> rref(RatMatrix& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t piv = row;
        while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Basis of the right nullspace (each column of the result is one vector).
inline RatMatrix nullspace(const RatMatrix& m) {
    RatMatrix e = m;
    std::vector<size_t> pivots = rref(e);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<size_t> free_cols;
    for (size_t j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    RatMatrix basis(m.cols(), free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        basis(f, k) = Rational(1);
        for (size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -e(i, f);
    }
    return basis;
}

inline RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("inverse of non-square matrix");
    size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    std::vector<size_t> piv = rref(aug);
    if (piv.size() != n || piv.back() >= n)
        throw precondition_error("matrix is singular");
    RatMatrix inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recursion.
inline UPoly<Rational> char_poly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw precondition_error("char_poly of non-square matrix");
    size_t n = m.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    RatMatrix mk = RatMatrix::identity(n);
    for (size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        Rational tr(0);
        for (size_t i = 0; i < n; ++i) tr += mk(i, i);
        Rational ck = tr / Rational(static_cast<long>(k));
        c[n - k] = -ck;
        for (size_t i = 0; i < n; ++i) mk(i, i) -= ck;
    }
    return UPoly<Rational>(std::move(c));
}

// Evaluate a univariate polynomial at a square matrix.
inline RatMatrix eval_at_matrix(const UPoly<Rational>& p, const RatMatrix& m) {
    size_t n = m.rows();
    RatMatrix acc(n, n);
    for (int i = p.degree(); i >= 0; --i) {
        acc = m * acc;
        Rational c = p.coeff(i);
        for (size_t d = 0; d < n; ++d) acc(d, d) += c;
    }
    return acc;
}

}  // namespace g2higgs

#endif
