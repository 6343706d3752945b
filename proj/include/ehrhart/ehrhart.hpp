/**
 * @file ehrhart.hpp
 * @brief Ehrhart/h* computation pipelines and closed forms.
 *
 * Three independent routes produce an EhrhartResult so they can
 * cross-validate: the fundamental-parallelepiped pipeline for simplices,
 * the count-and-interpolate pipeline for facet systems, and the
 * independent-subset formula for zonotopes. Family closed forms from the
 * literature live here as separate operations.
 */
#ifndef EHRHART_EHRHART_HPP
#define EHRHART_EHRHART_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ehrhart/hstar.hpp"
#include "ehrhart/lattice.hpp"
#include "ehrhart/numeric.hpp"
#include "ehrhart/polynomial.hpp"
#include "ehrhart/polytopes.hpp"

namespace ehrhart {

constexpr std::int64_t kDefaultBudget = 100'000'000;

enum class Method { parallelepiped, counting, zonotope_formula, closed_form, ascent_statistic };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::parallelepiped: return "parallelepiped";
        case Method::counting: return "counting";
        case Method::zonotope_formula: return "zonotope-formula";
        case Method::closed_form: return "closed-form";
        case Method::ascent_statistic: return "ascent-statistic";
    }
    return "?";
}

struct EhrhartResult {
    RationalPolynomial ehrhart;
    HStarVector hstar;
    Method method;
};

/// Bundles the pair and re-checks the defining identities.
inline EhrhartResult make_result(RationalPolynomial ehrhart, HStarVector hstar, Method method) {
    if (hstar_to_ehrhart(hstar) != ehrhart)
        throw std::logic_error("EhrhartResult: h* and Ehrhart polynomial disagree");
    if (ehrhart(Rational(0)) != 1)
        throw std::logic_error("EhrhartResult: i(0) != 1");
    return EhrhartResult{std::move(ehrhart), std::move(hstar), method};
}

// ---- zonotope pipeline ----

namespace detail {

// gcd of all k x k minors of the n x k column matrix
inline Int minor_gcd(const std::vector<const IntVector*>& cols) {
    std::size_t k = cols.size(), n = cols[0]->size();
    Int g = 0;
    std::vector<std::size_t> rows(k);
    for (std::size_t i = 0; i < k; ++i)
        rows[i] = i;
    for (;;) {
        RationalMatrix m(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                m(i, j) = Rational((*cols[j])[rows[i]]);
        Rational det = m.determinant();
        g = gcd(g, det.get_num());
        if (g == 1)
            return g;
        // next row combination
        std::size_t i = k;
        while (i-- > 0) {
            if (rows[i] + (k - i) < n) {
                ++rows[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    rows[j] = rows[j - 1] + 1;
                break;
            }
            if (i == 0)
                return abs(g);
        }
    }
}

inline void zonotope_subsets(const std::vector<IntVector>& gens, std::size_t next,
                             std::vector<const IntVector*>& chosen, std::vector<Int>& coeffs,
                             std::int64_t& budget) {
    for (std::size_t i = next; i < gens.size(); ++i) {
        if (--budget < 0)
            throw budget_error("zonotope_ehrhart: subset enumeration budget exceeded");
        chosen.push_back(&gens[i]);
        RationalMatrix m(gens[0].size(), chosen.size());
        for (std::size_t c = 0; c < chosen.size(); ++c)
            for (std::size_t r = 0; r < gens[0].size(); ++r)
                m(r, c) = Rational((*chosen[c])[r]);
        // supersets of a dependent set stay dependent: prune
        if (m.rank() == chosen.size()) {
            coeffs[chosen.size()] += minor_gcd(chosen);
            zonotope_subsets(gens, i + 1, chosen, coeffs, budget);
        }
        chosen.pop_back();
    }
}

}  // namespace detail

/**
 * Stanley's coefficient formula: i(Z;t) = sum over linearly independent
 * subsets S of the generators of g(S) t^{|S|}, with g(S) the gcd of the
 * maximal minors of the column matrix of S and g(emptyset) = 1.
 */
inline RationalPolynomial zonotope_ehrhart(const std::vector<IntVector>& generators,
                                           std::int64_t budget = kDefaultBudget) {
    for (const IntVector& g : generators) {
        bool zero = true;
        for (const Int& x : g)
            if (x != 0)
                zero = false;
        if (zero)
            throw std::domain_error("zonotope_ehrhart: zero generator");
    }
    std::vector<Int> coeffs(generators.size() + 1, 0);
    coeffs[0] = 1;
    std::vector<const IntVector*> chosen;
    detail::zonotope_subsets(generators, 0, chosen, coeffs, budget);
    return RationalPolynomial::from_int_coeffs(coeffs);
}

// ---- counting pipeline ----

/// i(P;t) for one dilate by pruned enumeration over the scaled box.
inline Int count_dilate(const Polytope& p, const Int& t, std::int64_t budget = kDefaultBudget) {
    if (t < 0)
        throw std::domain_error("count_dilate: negative dilate");
    if (p.hrep) {
        IntVector rhs(p.hrep->b.size());
        for (std::size_t r = 0; r < rhs.size(); ++r)
            rhs[r] = t * p.hrep->b[r];
        return count_hrep_points(p.hrep->a, rhs, p.hrep->unit_box.scaled(t), budget);
    }
    if (p.is_full_dim_simplex()) {
        auto [a, b] = simplex_hrep(p.vertices);
        IntVector rhs(b.size());
        for (std::size_t r = 0; r < rhs.size(); ++r)
            rhs[r] = t * b[r];
        return count_hrep_points(a, rhs, bounding_box(p.vertices).scaled(t), budget);
    }
    throw std::invalid_argument("count_dilate: '" + p.label +
                                "' has no facet system and is not a simplex");
}

// ---- the dispatching front end ----

enum class PipelineMethod { automatic, counting, parallelepiped, zonotope };

inline EhrhartResult compute(const Polytope& p, PipelineMethod method = PipelineMethod::automatic,
                             std::int64_t budget = kDefaultBudget) {
    if (method == PipelineMethod::automatic) {
        if (p.is_full_dim_simplex())
            method = PipelineMethod::parallelepiped;
        else if (!p.generators.empty())
            method = PipelineMethod::zonotope;
        else if (p.hrep)
            method = PipelineMethod::counting;
        else
            throw std::invalid_argument("compute: no pipeline applies to '" + p.label + "'");
    }
    switch (method) {
        case PipelineMethod::parallelepiped: {
            if (!p.is_full_dim_simplex())
                throw std::invalid_argument(
                    "compute: parallelepiped pipeline needs a full-dimensional simplex, '" +
                    p.label + "' is not one");
            HStarVector h = parallelepiped_hstar(p.vertices);
            RationalPolynomial i = hstar_to_ehrhart(h);
            return make_result(std::move(i), std::move(h), Method::parallelepiped);
        }
        case PipelineMethod::counting: {
            std::vector<std::pair<Int, Int>> points;
            for (int t = 0; t <= p.dim; ++t)
                points.emplace_back(t, count_dilate(p, t, budget));
            RationalPolynomial i = interpolate(points);
            HStarVector h = ehrhart_to_hstar(i, p.dim);
            return make_result(std::move(i), std::move(h), Method::counting);
        }
        case PipelineMethod::zonotope: {
            if (p.generators.empty())
                throw std::invalid_argument("compute: '" + p.label +
                                            "' has no zonotope realization");
            RationalPolynomial i = zonotope_ehrhart(p.generators, budget);
            if (i.degree() != p.dim)
                throw std::logic_error("compute: zonotope rank disagrees with polytope dimension");
            HStarVector h = ehrhart_to_hstar(i, p.dim);
            return make_result(std::move(i), std::move(h), Method::zonotope_formula);
        }
        default:
            throw std::invalid_argument("compute: unknown method");
    }
}

// ---- lecture hall simplices ----

/**
 * h* of the s-lecture hall simplex as the ascent histogram over all
 * s-inversion sequences 0 <= m_i < s_i (with m_0 = 0, s_0 = 1; ascent at
 * i iff m_i/s_i < m_{i+1}/s_{i+1}, compared by cross-multiplication).
 */
inline HStarVector lecture_hall_hstar(const IntVector& s, std::int64_t budget = kDefaultBudget) {
    if (s.empty())
        throw std::domain_error("lecture_hall_hstar: s must be nonempty");
    Int total = 1;
    for (const Int& si : s) {
        if (si < 1)
            throw std::domain_error("lecture_hall_hstar: s entries must be positive");
        if (si > std::numeric_limits<std::int32_t>::max())
            throw budget_error("lecture_hall_hstar: s entry " + si.get_str() + " too large");
        total *= si;
    }
    if (total > budget)
        throw budget_error("lecture_hall_hstar: " + total.get_str() +
                           " inversion sequences exceed the enumeration budget; use the "
                           "thin-simplex closed form when s = (1..,a,1..,b,1..)");
    std::size_t d = s.size();
    std::vector<std::int64_t> sv(d + 1), m(d + 1, 0);
    sv[0] = 1;  // m_0 = 0, s_0 = 1
    for (std::size_t i = 0; i < d; ++i)
        sv[i + 1] = s[i].get_si();
    std::vector<Int> hist(d + 1, 0);
    for (;;) {
        int asc = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (m[i] * sv[i + 1] < m[i + 1] * sv[i])
                ++asc;
        ++hist[asc];
        std::size_t k = d;
        while (k >= 1) {
            if (++m[k] < sv[k])
                break;
            m[k] = 0;
            --k;
        }
        if (k == 0)
            break;
    }
    return HStarVector(std::move(hist), static_cast<int>(d));
}

/// Closed form for thin lecture hall simplices s = (1^k1, a, 1^k2, b, 1^k3):
/// h* = (1 + (a-1)z)(1 + (b-1)z), padded to ambient degree d = k1+k2+k3+2.
inline HStarVector thin_lecture_hall_hstar(const Int& a, const Int& b, int k1, int k2, int k3) {
    if (a < 1 || b < 1)
        throw std::domain_error("thin_lecture_hall_hstar: a, b must be >= 1");
    if (k2 < 1)
        throw std::domain_error("thin_lecture_hall_hstar: k2 must be >= 1");
    if (k1 < 0 || k3 < 0)
        throw std::domain_error("thin_lecture_hall_hstar: k1, k3 must be >= 0");
    int d = k1 + k2 + k3 + 2;
    std::vector<Int> h(static_cast<std::size_t>(d) + 1, 0);
    h[0] = 1;
    h[1] = a + b - 2;
    h[2] = (a - 1) * (b - 1);
    return HStarVector(std::move(h), d);
}

/// i(P_3^{(a,1,b)};t) = (ab/6)t^3 + ((a+b)/2)t^2 + ((6+3(a+b)-ab)/6)t + 1.
inline RationalPolynomial lecture_hall_3d_ehrhart(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw std::domain_error("lecture_hall_3d_ehrhart: a, b must be >= 1");
    return RationalPolynomial(std::vector<Rational>{
        Rational(1), make_rational(6 + 3 * (a + b) - a * b, 6), make_rational(a + b, 2),
        make_rational(a * b, 6)});
}

/// The region of (a,b) where P_3^{(a,1,b)} fails Ehrhart positivity.
inline bool in_nonpositivity_cone(const Int& a, const Int& b) {
    if (a < 1 || b < 1)
        throw std::domain_error("in_nonpositivity_cone: a, b must be >= 1");
    return 6 + 3 * (a + b) - a * b < 0;
}

// ---- Payne's simplices ----

/// h* of payne(r,s,k): (1 + z^k + ... + z^{(s-1)k})(1 + z + ... + z^{k+r}).
inline HStarVector payne_hstar_closed_form(int r, int s, int k) {
    if (r < 0 || s < 3 || k < r + 2)
        throw std::domain_error("payne_hstar_closed_form: need r >= 0, s >= 3, k >= r+2");
    int d = s * k + r;
    std::vector<Int> h(static_cast<std::size_t>(d) + 1, 0);
    const std::size_t top = static_cast<std::size_t>(k) + static_cast<std::size_t>(r);
    for (std::size_t i = 0; i < static_cast<std::size_t>(s); ++i)
        for (std::size_t j = 0; j <= top; ++j)
            h[i * static_cast<std::size_t>(k) + j] += 1;
    return HStarVector(std::move(h), d);
}

// ---- chiseled cubes ----

/// h* of ch([-1,1]^d, 1): the cube's h* (from (2t+1)^d) minus 2^d in the
/// linear entry.
inline HStarVector chiseled_cube_hstar(int d) {
    if (d < 2)
        throw std::domain_error("chiseled_cube_hstar: d must be >= 2");
    RationalPolynomial cube =
        RationalPolynomial(std::vector<Rational>{Rational(1), Rational(2)}).pow(
            static_cast<unsigned>(d));
    HStarVector cube_h = ehrhart_to_hstar(cube, d);
    std::vector<Int> h = cube_h.entries();
    Int corners = 1;
    corners <<= static_cast<unsigned>(d);
    h[1] -= corners;
    if (h[1] < 0)
        throw std::logic_error("chiseled_cube_hstar: negative linear entry, identity violated");
    return HStarVector(std::move(h), d);
}

// ---- Reeve tetrahedra and pyramids over them ----

/// i(R_h;t) = (h/6)t^3 + t^2 + ((12-h)/6)t + 1.
inline RationalPolynomial reeve_ehrhart(const Int& h) {
    if (h < 1)
        throw std::domain_error("reeve_ehrhart: h must be >= 1");
    return RationalPolynomial(std::vector<Rational>{Rational(1), make_rational(12 - h, 6),
                                                    Rational(1), make_rational(h, 6)});
}

/// Threshold H = ceil(stirling1(d+1,2)/(d-2)!) + 1: Pyr^{d-3}(R_h) fails
/// Ehrhart positivity exactly for h >= H.
inline Int reeve_threshold(int d) {
    if (d < 3)
        throw std::domain_error("reeve_threshold: d must be >= 3");
    Rational q = make_rational(stirling1_unsigned(static_cast<unsigned>(d) + 1, 2),
                               factorial(static_cast<unsigned>(d) - 2));
    return ceil_to_int(q) + 1;
}

/// Ehrhart polynomial of the k-fold pyramid over a polytope with the
/// given h*: pad with zeros and change basis at dimension d+k.
inline RationalPolynomial pyramid_ehrhart(const HStarVector& base_hstar, int k) {
    if (k < 0)
        throw std::domain_error("pyramid_ehrhart: k must be >= 0");
    return hstar_to_ehrhart(base_hstar.padded(k));
}

// ---- cross-polytope closed form ----

/// i(cross_d;t) = sum_k C(d,k) C(t-k+d, d).
inline RationalPolynomial cross_polytope_ehrhart(int d) {
    if (d < 1)
        throw std::domain_error("cross_polytope_ehrhart: d must be >= 1");
    RationalPolynomial p;
    for (int k = 0; k <= d; ++k)
        p = p + Rational(binomial(Int(d), k)) * binomial_poly(d, d - k);
    return p;
}

}  // namespace ehrhart

#endif  // EHRHART_EHRHART_HPP
