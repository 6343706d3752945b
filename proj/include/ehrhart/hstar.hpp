/**
 * @file hstar.hpp
 * @brief h*-vectors, the h* <-> Ehrhart basis change, and coefficient
 *        shape predicates (positivity, unimodality, palindromicity).
 */
#ifndef EHRHART_HSTAR_HPP
#define EHRHART_HSTAR_HPP

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehrhart/numeric.hpp"
#include "ehrhart/polynomial.hpp"

namespace ehrhart {

/**
 * Coefficients h*_0..h*_d of the Ehrhart series numerator for a lattice
 * d-polytope. Trailing zeros are retained: the vector always has length
 * d+1 so pyramid invariance is visible in the representation.
 *
 * Invariants: h*_0 = 1, every entry >= 0, length = ambient_dim + 1.
 */
class HStarVector {
public:
    HStarVector(std::vector<Int> entries, int ambient_dim) : entries_(std::move(entries)), dim_(ambient_dim) {
        if (dim_ < 0 || entries_.size() != static_cast<std::size_t>(dim_) + 1)
            throw std::invalid_argument("HStarVector: need exactly d+1 entries");
        if (entries_[0] != 1)
            throw std::invalid_argument("HStarVector: h*_0 must be 1");
        for (const Int& e : entries_)
            if (e < 0)
                throw std::invalid_argument("HStarVector: negative entry");
    }

    const std::vector<Int>& entries() const { return entries_; }
    int ambient_dim() const { return dim_; }
    const Int& operator[](std::size_t i) const { return entries_.at(i); }

    /// Degree of the h*-polynomial (index of the last nonzero entry).
    int support_degree() const {
        int s = 0;
        for (int i = dim_; i >= 0; --i)
            if (entries_[i] != 0) {
                s = i;
                break;
            }
        return s;
    }

    /// Normalized volume: h*(1) = sum of the entries.
    Int sum() const {
        Int s = 0;
        for (const Int& e : entries_)
            s += e;
        return s;
    }

    /// Same entries viewed in ambient dimension dim + extra (trailing zeros).
    HStarVector padded(int extra) const {
        if (extra < 0)
            throw std::invalid_argument("HStarVector::padded: negative padding");
        std::vector<Int> e = entries_;
        e.resize(e.size() + static_cast<std::size_t>(extra), 0);
        return HStarVector(std::move(e), dim_ + extra);
    }

    RationalPolynomial to_polynomial() const {
        return RationalPolynomial::from_int_coeffs(entries_);
    }

    friend bool operator==(const HStarVector& a, const HStarVector& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < entries_.size(); ++i)
            os << (i ? "," : "") << entries_[i].get_str();
        os << ")";
        return os.str();
    }

private:
    std::vector<Int> entries_;
    int dim_;
};

/// i(P;t) = sum_j h*_j binomial(t + d - j, d). Degree exactly d, i(0) = 1.
inline RationalPolynomial hstar_to_ehrhart(const HStarVector& h) {
    int d = h.ambient_dim();
    RationalPolynomial p;
    for (int j = 0; j <= d; ++j) {
        if (h[j] == 0)
            continue;
        p = p + Rational(h[j]) * binomial_poly(d, d - j);
    }
    return p;
}

/**
 * Inverse basis change: the unique integer vector h with
 * hstar_to_ehrhart(h) = p. The change-of-basis matrix
 * M[i][j] = binomial(i + d - j, d) is unitriangular, so h is obtained by
 * forward substitution from the values p(0..d). Throws std::domain_error
 * if the solution is not a valid h*-vector (non-integer or negative
 * entry, or h*_0 != 1).
 */
inline HStarVector ehrhart_to_hstar(const RationalPolynomial& p, int d) {
    if (p.degree() != d)
        throw std::domain_error("ehrhart_to_hstar: polynomial degree " +
                                std::to_string(p.degree()) + " != d = " + std::to_string(d));
    std::vector<Int> h(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rational v = p(Rational(i));
        for (int j = 0; j < i; ++j)
            v -= Rational(h[j]) * Rational(binomial(Int(i + d - j), d));
        if (!is_integer(v) || v < 0)
            throw std::domain_error(
                "ehrhart_to_hstar: not an Ehrhart polynomial of a lattice d-polytope "
                "(h*_" + std::to_string(i) + " = " + fraction_string(v) + ")");
        h[i] = v.get_num();
    }
    if (h[0] != 1)
        throw std::domain_error(
            "ehrhart_to_hstar: not an Ehrhart polynomial of a lattice d-polytope (h*_0 != 1)");
    return HStarVector(std::move(h), d);
}

/// Weakly rises then weakly falls for some peak index.
inline bool is_unimodal(const std::vector<Int>& seq) {
    if (seq.empty())
        throw std::invalid_argument("is_unimodal: empty sequence");
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1])
        ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1])
        ++i;
    return i + 1 == seq.size();
}

/// An interior valley witnessing non-unimodality: an index j with a
/// strictly larger entry somewhere before it and somewhere after it.
/// Empty iff the sequence is unimodal.
inline std::optional<std::size_t> valley_index(const std::vector<Int>& seq) {
    std::size_t a = 0;
    while (a + 1 < seq.size() && seq[a] <= seq[a + 1])
        ++a;
    std::size_t b = a;
    while (b + 1 < seq.size() && seq[b] >= seq[b + 1])
        ++b;
    if (b + 1 >= seq.size())
        return std::nullopt;
    std::size_t j = a + 1;
    for (std::size_t i = a + 1; i <= b; ++i)
        if (seq[i] < seq[j])
            j = i;
    return j;
}

/// Every stored coefficient of degrees 0..deg(p) is strictly positive.
/// A vanishing coefficient fails.
inline bool is_positive(const RationalPolynomial& p) {
    if (p.is_zero())
        return false;
    for (const Rational& c : p.coefficients())
        if (c <= 0)
            return false;
    return true;
}

/// Palindromic after truncating trailing zeros: h*_j = h*_{s-j} where s
/// is the degree of the h*-polynomial.
inline bool is_palindromic(const HStarVector& h) {
    int s = h.support_degree();
    for (int j = 0; j <= s; ++j)
        if (h[j] != h[s - j])
            return false;
    return true;
}

}  // namespace ehrhart

#endif  // EHRHART_HSTAR_HPP
