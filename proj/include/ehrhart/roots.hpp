/**
 * @file roots.hpp
 * @brief Root-location diagnostics: exact real-root counting via Sturm
 *        sequences, and numeric root lists for circle/line checks.
 */
#ifndef EHRHART_ROOTS_HPP
#define EHRHART_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ehrhart/polynomial.hpp"

namespace ehrhart {

using ComplexApprox = std::complex<double>;

namespace detail {

// Sign variation count of a Sturm chain at +inf (sign of leading
// coefficient) or -inf (times (-1)^degree).
inline int sign_variations_at_infinity(const std::vector<RationalPolynomial>& chain, bool positive) {
    int last = 0, var = 0;
    for (const auto& p : chain) {
        if (p.is_zero())
            continue;
        int s = sgn(p.leading());
        if (!positive && p.degree() % 2 == 1)
            s = -s;
        if (last != 0 && s != 0 && s != last)
            ++var;
        if (s != 0)
            last = s;
    }
    return var;
}

}  // namespace detail

/// Number of distinct real roots of p, via a Sturm sequence on the
/// squarefree part. Exact. Throws on the zero polynomial.
inline int real_root_count(const RationalPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("real_root_count: zero polynomial");
    RationalPolynomial q = squarefree_part(p);
    if (q.degree() == 0)
        return 0;
    std::vector<RationalPolynomial> chain{q, q.derivative()};
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        chain.push_back(-divmod(a, b).second);
    }
    chain.pop_back();
    return detail::sign_variations_at_infinity(chain, false) -
           detail::sign_variations_at_infinity(chain, true);
}

/// All roots real (counted without multiplicity against the squarefree
/// degree; a nonzero constant is vacuously real-rooted).
inline bool is_real_rooted(const RationalPolynomial& p) {
    if (p.is_zero())
        throw std::domain_error("is_real_rooted: zero polynomial");
    RationalPolynomial q = squarefree_part(p);
    return real_root_count(q) == q.degree();
}

namespace detail {

// Durand-Kerner simultaneous iteration on a squarefree polynomial given
// by monic double coefficients (ascending). Deterministic: equispaced
// start points on the Cauchy-bound circle.
inline std::vector<ComplexApprox> durand_kerner(const std::vector<double>& monic,
                                                const std::string& label) {
    const int n = static_cast<int>(monic.size()) - 1;
    double radius = 0.0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::abs(monic[i]));
    radius += 1.0;

    std::vector<ComplexApprox> x(n);
    for (int k = 0; k < n; ++k) {
        double angle = (2.0 * M_PI * k + 0.5) / n;
        x[k] = std::polar(radius, angle);
    }
    auto eval = [&](ComplexApprox z) {
        ComplexApprox acc = 1.0;  // monic leading coefficient
        for (int i = n - 1; i >= 0; --i)
            acc = acc * z + monic[i];
        return acc;
    };
    const int iteration_cap = 10000;
    for (int iter = 0; iter < iteration_cap; ++iter) {
        double max_step = 0.0;
        for (int k = 0; k < n; ++k) {
            ComplexApprox denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    denom *= x[k] - x[j];
            ComplexApprox step = eval(x[k]) / denom;
            x[k] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        if (max_step < 1e-14 * radius)
            return x;
    }
    throw std::runtime_error("roots_numeric: no convergence for " + label);
}

}  // namespace detail

/**
 * deg(p) approximate roots (multiplicities repeated). Multiple roots are
 * split off exactly first: Durand-Kerner runs on the squarefree part
 * only, and each computed root is checked against |p(root)| / ||p|| < tol
 * with ||p|| the largest coefficient magnitude.
 */
inline std::vector<ComplexApprox> roots_numeric(const RationalPolynomial& p, double tol = 1e-8) {
    if (p.degree() < 1)
        throw std::domain_error("roots_numeric: degree must be >= 1");
    if (tol <= 0)
        throw std::domain_error("roots_numeric: tolerance must be positive");

    RationalPolynomial q = squarefree_part(p);
    std::vector<double> monic(static_cast<std::size_t>(q.degree()) + 1);
    for (int i = 0; i <= q.degree(); ++i)
        monic[i] = Rational(q.coeff(i) / q.leading()).get_d();
    std::vector<ComplexApprox> distinct = detail::durand_kerner(monic, p.to_string("x"));

    // Multiplicities: peeling the squarefree part off p repeatedly drops
    // every multiplicity by one, so a distinct root's multiplicity is the
    // number of peeling levels that still vanish on it.
    std::vector<int> multiplicity(distinct.size(), 0);
    RationalPolynomial rest = p;
    while (rest.degree() > 0) {
        RationalPolynomial sf = squarefree_part(rest);
        double scale = 0.0;
        for (const Rational& c : sf.coefficients())
            scale = std::max(scale, std::abs(c.get_d()));
        for (std::size_t k = 0; k < distinct.size(); ++k)
            if (std::abs(sf(distinct[k])) < 1e-6 * scale)
                ++multiplicity[k];
        rest = divmod(rest, sf).first;
    }

    double norm = 0.0;
    for (const Rational& c : p.coefficients())
        norm = std::max(norm, std::abs(c.get_d()));
    std::vector<ComplexApprox> out;
    out.reserve(static_cast<std::size_t>(p.degree()));
    for (std::size_t k = 0; k < distinct.size(); ++k) {
        if (std::abs(p(distinct[k])) / norm >= tol)
            throw std::runtime_error("roots_numeric: residual above tolerance for " +
                                     p.to_string("x"));
        for (int m = 0; m < multiplicity[k]; ++m)
            out.push_back(distinct[k]);
    }
    if (out.size() != static_cast<std::size_t>(p.degree()))
        throw std::runtime_error("roots_numeric: multiplicity bookkeeping failed for " +
                                 p.to_string("x"));
    std::sort(out.begin(), out.end(), [](const ComplexApprox& a, const ComplexApprox& b) {
        if (a.real() != b.real())
            return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

/// Every root within tol of the unit circle: | |z| - 1 | < tol.
inline bool all_roots_on_unit_circle(const RationalPolynomial& p, double tol = 1e-8) {
    for (const ComplexApprox& z : roots_numeric(p, tol))
        if (std::abs(std::abs(z) - 1.0) >= tol)
            return false;
    return true;
}

/// Every root within tol of the vertical line Re = -1/2.
inline bool all_roots_on_critical_line(const RationalPolynomial& p, double tol = 1e-8) {
    for (const ComplexApprox& z : roots_numeric(p, tol))
        if (std::abs(z.real() + 0.5) >= tol)
            return false;
    return true;
}

}  // namespace ehrhart

#endif  // EHRHART_ROOTS_HPP
