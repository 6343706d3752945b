/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials with exact rational coefficients.
 *
 * Coefficients are stored in ascending degree; the top stored coefficient
 * is nonzero unless the polynomial is zero (empty coefficient list,
 * degree -1). Everything here is exact.
 */
#ifndef EHRHART_POLYNOMIAL_HPP
#define EHRHART_POLYNOMIAL_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/numeric.hpp"

namespace ehrhart {

class RationalPolynomial {
public:
    RationalPolynomial() = default;  // zero polynomial

    explicit RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static RationalPolynomial constant(const Rational& c) {
        return RationalPolynomial(std::vector<Rational>{c});
    }

    static RationalPolynomial variable() {
        return RationalPolynomial(std::vector<Rational>{Rational(0), Rational(1)});
    }

    static RationalPolynomial from_int_coeffs(const std::vector<Int>& coeffs) {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (const Int& z : coeffs)
            c.emplace_back(z);
        return RationalPolynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    std::complex<double> operator()(const std::complex<double>& x) const {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + std::complex<double>(it->get_d());
        return acc;
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size())
            return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            if (a.coeffs_[i] != b.coeffs_[i])
                return false;
        return true;
    }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            c[i] += b.coeffs_[i];
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            c[i] -= b.coeffs_[i];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial operator-() const {
        std::vector<Rational> c = coeffs_;
        for (Rational& q : c)
            q = -q;
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero())
            return RationalPolynomial();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return RationalPolynomial(std::move(c));
    }

    friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& p) {
        std::vector<Rational> c = p.coeffs_;
        for (Rational& q : c)
            q *= s;
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial derivative() const {
        if (coeffs_.size() <= 1)
            return RationalPolynomial();
        std::vector<Rational> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
        return RationalPolynomial(std::move(c));
    }

    RationalPolynomial pow(unsigned e) const {
        RationalPolynomial r = constant(1);
        for (unsigned i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }

    /// Euclidean division: returns (quotient, remainder) with deg r < deg b.
    friend std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                    const RationalPolynomial& b) {
        if (b.is_zero())
            throw std::domain_error("divmod: division by zero polynomial");
        std::vector<Rational> rem = a.coeffs_;
        std::vector<Rational> quot;
        int db = b.degree();
        if (a.degree() >= db)
            quot.assign(a.degree() - db + 1, Rational(0));
        while (static_cast<int>(rem.size()) - 1 >= db) {
            if (rem.back() == 0) {
                rem.pop_back();
                continue;
            }
            int dr = static_cast<int>(rem.size()) - 1;
            Rational f = rem.back() / b.coeffs_.back();
            quot[dr - db] = f;
            for (int i = 0; i <= db; ++i)
                rem[dr - db + i] -= f * b.coeffs_[i];
            rem.pop_back();
        }
        return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = coeffs_[i];
            if (c == 0)
                continue;
            if (!first)
                os << (c > 0 ? " + " : " - ");
            else if (c < 0)
                os << "-";
            Rational a = abs(c);
            if (i == 0 || a != 1)
                os << a.get_str();
            if (i > 0) {
                if (a != 1)
                    os << "*";
                os << var;
                if (i > 1)
                    os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0)
            coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Monic gcd via the Euclidean algorithm. gcd(p, 0) = monic p.
inline RationalPolynomial monic_gcd(RationalPolynomial a, RationalPolynomial b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return make_rational(1, 1) / a.leading() * a;
}

/// p with all repeated factors reduced to multiplicity one.
inline RationalPolynomial squarefree_part(const RationalPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("squarefree_part: zero polynomial");
    if (p.degree() == 0)
        return RationalPolynomial::constant(1);
    RationalPolynomial g = monic_gcd(p, p.derivative());
    return divmod(p, g).first;
}

/// Newton interpolation through points with pairwise distinct abscissae.
inline RationalPolynomial interpolate(const std::vector<std::pair<Int, Int>>& points) {
    if (points.empty())
        throw std::invalid_argument("interpolate: no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: duplicate abscissa " +
                                            points[i].first.get_str());
    // divided differences
    std::vector<Rational> dd;
    dd.reserve(points.size());
    for (const auto& [x, y] : points)
        dd.emplace_back(y);
    for (std::size_t level = 1; level < points.size(); ++level)
        for (std::size_t i = points.size() - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) /
                    Rational(points[i].first - points[i - level].first);
    RationalPolynomial result = RationalPolynomial::constant(dd.back());
    for (std::size_t i = points.size() - 1; i-- > 0;) {
        // result = result * (t - x_i) + dd[i]
        RationalPolynomial lin(std::vector<Rational>{Rational(-points[i].first), Rational(1)});
        result = result * lin + RationalPolynomial::constant(dd[i]);
    }
    return result;
}

/// The degree-d polynomial binomial(t + shift, d) expanded in t.
/// Leading coefficient 1/d!; binomial_poly(0, s) = 1.
inline RationalPolynomial binomial_poly(int d, int shift) {
    if (d < 0)
        throw std::domain_error("binomial_poly: negative degree");
    RationalPolynomial r = RationalPolynomial::constant(1);
    for (int i = 0; i < d; ++i) {
        RationalPolynomial lin(std::vector<Rational>{Rational(shift - i), Rational(1)});
        r = r * lin;
    }
    return make_rational(1, factorial(static_cast<unsigned long>(d))) * r;
}

}  // namespace ehrhart

#endif  // EHRHART_POLYNOMIAL_HPP
