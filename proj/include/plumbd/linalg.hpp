#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "plumbd/errors.hpp"
#include "plumbd/rational.hpp"

namespace plumbd {

// Minimal dense row-major matrix over an exact scalar.
template <typename T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    assert(a.cols() == b.rows());
    Mat<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

inline IntVec mat_vec(const IntMat& a, const IntVec& x) {
    assert(a.cols() == x.size());
    IntVec y(a.rows(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline RatVec mat_vec(const RatMat& a, const IntVec& x) {
    assert(a.cols() == x.size());
    RatVec y(a.rows(), Rat(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

inline RatMat to_rat(const IntMat& a) {
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    return r;
}

// Fraction-free Bareiss elimination with row pivoting; every division is exact.
inline Int det_bareiss(IntMat a) {
    const std::size_t n = a.rows();
    assert(n == a.cols());
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Exact Gauss-Jordan inverse; nullopt when the matrix is singular.
inline std::optional<RatMat> rational_inverse(const IntMat& m) {
    const std::size_t n = m.rows();
    assert(n == m.cols());
    RatMat a = to_rat(m);
    RatMat inv = RatMat::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && a(r, k) == 0) ++r;
        if (r == n) return std::nullopt;
        if (r != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(r, j));
                std::swap(inv(k, j), inv(r, j));
            }
        Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

// Exact LDL^T of a symmetric matrix, no pivoting. `pivots` holds the diagonal
// of D up to the point the elimination reached. `complete` is false exactly
// when a zero pivot blocked a required division; such a matrix has a vanishing
// leading principal minor and is never negative definite.
struct LdlResult {
    RatMat unit_lower;  // L, unit diagonal
    RatVec pivots;      // diagonal of D
    bool complete = false;
};

inline LdlResult ldl_decompose(const IntMat& m) {
    const std::size_t n = m.rows();
    assert(m.is_symmetric());
    LdlResult res;
    res.unit_lower = RatMat::identity(n);
    RatMat& l = res.unit_lower;
    RatVec& d = res.pivots;
    for (std::size_t j = 0; j < n; ++j) {
        Rat dj = Rat(m(j, j));
        for (std::size_t k = 0; k < j; ++k) dj -= l(j, k) * l(j, k) * d[k];
        d.push_back(dj);
        if (dj == 0) {
            // Continuing is only possible when the whole column is annihilated.
            for (std::size_t i = j + 1; i < n; ++i) {
                Rat num = Rat(m(i, j));
                for (std::size_t k = 0; k < j; ++k) num -= l(i, k) * l(j, k) * d[k];
                if (num != 0) return res;  // complete stays false
                l(i, j) = 0;
            }
            continue;
        }
        for (std::size_t i = j + 1; i < n; ++i) {
            Rat num = Rat(m(i, j));
            for (std::size_t k = 0; k < j; ++k) num -= l(i, k) * l(j, k) * d[k];
            l(i, j) = num / dj;
        }
    }
    res.complete = true;
    return res;
}

// Reconstructs L * D * L^T.
inline RatMat ldl_reconstruct(const LdlResult& f) {
    const std::size_t n = f.unit_lower.rows();
    RatMat ld(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) ld(i, k) = f.unit_lower(i, k) * f.pivots[k];
    RatMat lt(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lt(i, j) = f.unit_lower(j, i);
    return mat_mul(ld, lt);
}

// Smith normal form restricted to what coset enumeration needs: a diagonal
// d_1 | d_2 | ... | d_n (all >= 0) together with a unimodular P such that
// M = P * diag(d) * Q for some unimodular Q. Only P is tracked: the coset
// representatives of Z^n / M Z^n are { P*t : 0 <= t_i < d_i }.
struct SmithResult {
    std::vector<Int> diag;
    IntMat left;  // P
};

namespace detail {

// Row operations on W correspond to column operations on P keeping M = P*W*Q:
//   swap rows i,j        -> swap columns i,j of P
//   row_i -= q * row_k   -> col_k += q * col_i of P
//   negate row i         -> negate column i of P
inline void p_col_add(IntMat& p, std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < p.rows(); ++r) p(r, dst) += q * p(r, src);
}

inline void p_col_swap(IntMat& p, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < p.rows(); ++r) std::swap(p(r, a), p(r, b));
}

}  // namespace detail

inline SmithResult smith_normal_form(const IntMat& m) {
    const std::size_t n = m.rows();
    assert(n == m.cols());
    IntMat w = m;
    IntMat p = IntMat::identity(n);

    for (std::size_t t = 0; t < n; ++t) {
        // Pivot: entry of minimal nonzero magnitude in the trailing block.
        std::size_t pi = n, pj = n;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j) {
                if (w(i, j) == 0) continue;
                if (pi == n || cmp(abs(w(i, j)), abs(w(pi, pj))) < 0) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi == n) break;  // trailing block is zero
        if (pi != t) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(t, j), w(pi, j));
            detail::p_col_swap(p, t, pi);
        }
        if (pj != t)
            for (std::size_t i = 0; i < n; ++i) std::swap(w(i, t), w(i, pj));

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w(i, t).get_mpz_t(), w(t, t).get_mpz_t());
                if (q != 0) {
                    for (std::size_t j = 0; j < n; ++j) w(i, j) -= q * w(t, j);
                    detail::p_col_add(p, t, i, q);
                }
                if (w(i, t) != 0) {
                    // Remainder strictly smaller in magnitude; promote it.
                    for (std::size_t j = 0; j < n; ++j) std::swap(w(t, j), w(i, j));
                    detail::p_col_swap(p, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (w(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w(t, j).get_mpz_t(), w(t, t).get_mpz_t());
                if (q != 0)
                    for (std::size_t i = 0; i < n; ++i) w(i, j) -= q * w(i, t);
                if (w(t, j) != 0) {
                    for (std::size_t i = 0; i < n; ++i) std::swap(w(i, t), w(i, j));
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility: d_t must divide the trailing block.
            std::size_t bi = n;
            for (std::size_t i = t + 1; i < n && bi == n; ++i)
                for (std::size_t j = t + 1; j < n && bi == n; ++j)
                    if (w(i, j) % w(t, t) != 0) bi = i;
            if (bi == n) break;
            for (std::size_t j = 0; j < n; ++j) w(t, j) += w(bi, j);
            detail::p_col_add(p, bi, t, Int(-1));
        }
        if (w(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) w(t, j) = -w(t, j);
            for (std::size_t r = 0; r < n; ++r) p(r, t) = -p(r, t);
        }
    }

    SmithResult res;
    res.diag.reserve(n);
    for (std::size_t i = 0; i < n; ++i) res.diag.push_back(w(i, i));
    res.left = std::move(p);
    assert(abs(det_bareiss(res.left)) == 1);
    return res;
}

}  // namespace plumbd
