/**
 * @file matrix.hpp
 * @brief Exact integer matrices, rational elimination (inverse, rank,
 *        determinant), and the Smith normal form.
 */
#ifndef EHRHART_MATRIX_HPP
#define EHRHART_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

using IntVector = std::vector<Int>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVector>& cols) {
        if (cols.empty())
            throw std::invalid_argument("IntMatrix::from_columns: no columns");
        IntMatrix m(cols[0].size(), cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != m.rows_)
                throw std::invalid_argument("IntMatrix::from_columns: ragged columns");
            for (std::size_t i = 0; i < m.rows_; ++i)
                m(i, j) = cols[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in product");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    IntVector apply(const IntVector& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("IntMatrix: dimension mismatch in apply");
        IntVector y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += (*this)(i, j) * x[j];
        return y;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[a] += f * row[b]
    void add_row(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) += f * (*this)(b, j);
    }
    // col[a] += f * col[b]
    void add_col(std::size_t a, std::size_t b, const Int& f) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, a) += f * (*this)(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(a, j) = -(*this)(a, j);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Dense rational matrix; just enough for exact inversion, rank and
/// determinants of the small systems used here.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    explicit RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                (*this)(i, j) = Rational(m(i, j));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const {
        RationalMatrix m = *this;
        std::size_t r = 0;
        for (std::size_t j = 0; j < cols_ && r < rows_; ++j) {
            std::size_t piv = r;
            while (piv < rows_ && m(piv, j) == 0)
                ++piv;
            if (piv == rows_)
                continue;
            if (piv != r)
                for (std::size_t k = 0; k < cols_; ++k)
                    std::swap(m(r, k), m(piv, k));
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, j) == 0)
                    continue;
                Rational f = m(i, j) / m(r, j);
                for (std::size_t k = j; k < cols_; ++k)
                    m(i, k) -= f * m(r, k);
            }
            ++r;
        }
        return r;
    }

    Rational determinant() const {
        if (rows_ != cols_)
            throw std::invalid_argument("determinant: matrix not square");
        RationalMatrix m = *this;
        Rational det = 1;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::size_t piv = j;
            while (piv < rows_ && m(piv, j) == 0)
                ++piv;
            if (piv == rows_)
                return Rational(0);
            if (piv != j) {
                for (std::size_t k = 0; k < cols_; ++k)
                    std::swap(m(j, k), m(piv, k));
                det = -det;
            }
            det *= m(j, j);
            for (std::size_t i = j + 1; i < rows_; ++i) {
                if (m(i, j) == 0)
                    continue;
                Rational f = m(i, j) / m(j, j);
                for (std::size_t k = j; k < cols_; ++k)
                    m(i, k) -= f * m(j, k);
            }
        }
        return det;
    }

    /// Gauss-Jordan inverse; empty if singular.
    std::optional<RationalMatrix> inverse() const {
        if (rows_ != cols_)
            throw std::invalid_argument("inverse: matrix not square");
        std::size_t n = rows_;
        RationalMatrix m = *this;
        RationalMatrix inv(n, n);
        for (std::size_t i = 0; i < n; ++i)
            inv(i, i) = 1;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t piv = j;
            while (piv < n && m(piv, j) == 0)
                ++piv;
            if (piv == n)
                return std::nullopt;
            if (piv != j)
                for (std::size_t k = 0; k < n; ++k) {
                    std::swap(m(j, k), m(piv, k));
                    std::swap(inv(j, k), inv(piv, k));
                }
            Rational d = m(j, j);
            for (std::size_t k = 0; k < n; ++k) {
                m(j, k) /= d;
                inv(j, k) /= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j || m(i, j) == 0)
                    continue;
                Rational f = m(i, j);
                for (std::size_t k = 0; k < n; ++k) {
                    m(i, k) -= f * m(j, k);
                    inv(i, k) -= f * inv(j, k);
                }
            }
        }
        return inv;
    }

    std::vector<Rational> apply(const std::vector<Rational>& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("RationalMatrix: dimension mismatch in apply");
        std::vector<Rational> y(rows_, Rational(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                y[i] += (*this)(i, j) * x[j];
        return y;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

inline Int determinant(const IntMatrix& m) {
    Rational d = RationalMatrix(m).determinant();
    if (!is_integer(d))
        throw std::logic_error("determinant: integer matrix with non-integer determinant");
    return d.get_num();
}

struct SNFResult {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, divisibility chain d1 | d2 | ..., entries >= 0
    IntMatrix v;  // unimodular, cols x cols
};

/**
 * Smith normal form U*A*V = D by elementary row/column operations.
 * Pivot selection: nonzero entry of minimal absolute value in the
 * trailing submatrix, ties broken row-major.
 */
inline SNFResult smith_normal_form(const IntMatrix& a) {
    if (a.empty())
        throw std::invalid_argument("smith_normal_form: empty matrix");
    std::size_t m = a.rows(), n = a.cols();
    SNFResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;

    std::size_t top = std::min(m, n);
    for (std::size_t s = 0; s < top; ++s) {
        for (;;) {
            // minimal nonzero |entry| in d[s.., s..]
            std::size_t pi = s, pj = s;
            bool found = false;
            for (std::size_t i = s; i < m; ++i)
                for (std::size_t j = s; j < n; ++j) {
                    if (d(i, j) == 0)
                        continue;
                    if (!found || cmp(abs(d(i, j)), abs(d(pi, pj))) < 0) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) {
                top = s;  // trailing block all zero
                break;
            }
            if (pi != s) {
                d.swap_rows(s, pi);
                r.u.swap_rows(s, pi);
            }
            if (pj != s) {
                d.swap_cols(s, pj);
                r.v.swap_cols(s, pj);
            }
            bool clean = true;
            for (std::size_t i = s + 1; i < m; ++i) {
                if (d(i, s) == 0)
                    continue;
                Int q = d(i, s) / d(s, s);  // truncated is fine, we iterate
                if (q != 0) {
                    d.add_row(i, s, -q);
                    r.u.add_row(i, s, -q);
                }
                if (d(i, s) != 0)
                    clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                if (d(s, j) == 0)
                    continue;
                Int q = d(s, j) / d(s, s);
                if (q != 0) {
                    d.add_col(j, s, -q);
                    r.v.add_col(j, s, -q);
                }
                if (d(s, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // enforce the divisibility chain: pull a non-divisible entry
            // into the pivot row and reduce again
            bool divides_all = true;
            for (std::size_t i = s + 1; i < m && divides_all; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (d(i, j) % d(s, s) != 0) {
                        d.add_row(s, i, 1);
                        r.u.add_row(s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
    }
    for (std::size_t s = 0; s < std::min(m, n); ++s)
        if (d(s, s) < 0) {
            d.negate_row(s);
            r.u.negate_row(s);
        }
    return r;
}

}  // namespace ehrhart

#endif  // EHRHART_MATRIX_HPP
