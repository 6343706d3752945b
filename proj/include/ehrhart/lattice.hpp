/**
 * @file lattice.hpp
 * @brief Lattice-point machinery: exact membership tests, bounded
 *        enumeration with per-coordinate pruning, and the fundamental
 *        parallelepiped h* computation for integer simplices.
 */
#ifndef EHRHART_LATTICE_HPP
#define EHRHART_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehrhart/hstar.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/numeric.hpp"

namespace ehrhart {

struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Axis-aligned integer box, inclusive bounds per coordinate.
struct Box {
    IntVector lo, hi;

    std::size_t dim() const { return lo.size(); }

    bool empty() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i])
                return true;
        return lo.empty();
    }

    Box scaled(const Int& t) const {
        Box b = *this;
        for (std::size_t i = 0; i < lo.size(); ++i) {
            b.lo[i] *= t;
            b.hi[i] *= t;
        }
        return b;
    }
};

inline Box bounding_box(const std::vector<IntVector>& points) {
    if (points.empty())
        throw std::invalid_argument("bounding_box: no points");
    Box b{points[0], points[0]};
    for (const IntVector& p : points)
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < b.lo[i])
                b.lo[i] = p[i];
            if (p[i] > b.hi[i])
                b.hi[i] = p[i];
        }
    return b;
}

/// Membership of point in t * {x : A x <= b}, i.e. A*point <= t*b.
inline bool hrep_contains(const IntMatrix& a, const IntVector& b, const IntVector& point,
                          const Int& t) {
    if (a.rows() != b.size() || a.cols() != point.size())
        throw std::invalid_argument("hrep_contains: dimension mismatch");
    if (t < 0)
        throw std::domain_error("hrep_contains: negative dilate");
    for (std::size_t r = 0; r < a.rows(); ++r) {
        Int acc = 0;
        for (std::size_t j = 0; j < point.size(); ++j)
            acc += a(r, j) * point[j];
        if (acc > t * b[r])
            return false;
    }
    return true;
}

/**
 * Membership of point in the t-th dilate of the simplex conv(vertices):
 * point = sum lambda_i v_i with lambda_i >= 0 and sum lambda_i = t,
 * decided by exact rational elimination on the homogenized system.
 * Throws if the vertices are affinely dependent.
 */
inline bool simplex_contains(const std::vector<IntVector>& vertices, const IntVector& point,
                             const Int& t) {
    if (vertices.empty())
        throw std::invalid_argument("simplex_contains: no vertices");
    std::size_t n = vertices[0].size();
    if (vertices.size() != n + 1 || point.size() != n)
        throw std::invalid_argument("simplex_contains: need n+1 vertices in dimension n");
    if (t < 0)
        throw std::domain_error("simplex_contains: negative dilate");
    RationalMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = Rational(vertices[j][i]);
        m(n, j) = 1;
    }
    auto inv = m.inverse();
    if (!inv)
        throw std::invalid_argument("simplex_contains: affinely dependent vertices");
    std::vector<Rational> rhs(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = Rational(point[i]);
    rhs[n] = Rational(t);
    for (const Rational& lambda : inv->apply(rhs))
        if (lambda < 0)
            return false;
    return true;
}

namespace detail {

constexpr std::int64_t kNoBudget = std::numeric_limits<std::int64_t>::max();

template <typename F>
void walk_box(const Box& box, IntVector& point, std::size_t k, std::int64_t& budget, F&& visit) {
    if (k == box.dim()) {
        visit(point);
        return;
    }
    for (Int x = box.lo[k]; x <= box.hi[k]; ++x) {
        if (--budget < 0)
            throw budget_error("count_lattice_points: enumeration budget exceeded");
        point[k] = x;
        walk_box(box, point, k + 1, budget, visit);
    }
}

}  // namespace detail

/**
 * Exact number of integer points of the box satisfying the membership
 * predicate. Deterministic and independent of any partition of the box
 * into sub-boxes. Empty box counts zero.
 */
inline Int count_lattice_points(const std::function<bool(const IntVector&)>& member,
                                const Box& box, std::int64_t budget = detail::kNoBudget) {
    if (box.empty())
        return 0;
    Int count = 0;
    IntVector point(box.dim(), 0);
    detail::walk_box(box, point, 0, budget, [&](const IntVector& p) {
        if (member(p))
            ++count;
    });
    return count;
}

namespace detail {

// DFS over the box, one coordinate per level, pruning a prefix as soon
// as some inequality can no longer be satisfied by any completion.
template <typename T>
Int count_dilate_rows(const std::vector<std::vector<T>>& a, const std::vector<T>& rhs,
                      const std::vector<T>& lo, const std::vector<T>& hi, std::int64_t& budget) {
    std::size_t rows = a.size(), n = lo.size();
    // minrest[r][k] = min over completions x_k..x_{n-1} of sum a[r][j]*x_j
    std::vector<std::vector<T>> minrest(rows, std::vector<T>(n + 1, T(0)));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t k = n; k-- > 0;) {
            T contrib = a[r][k] >= 0 ? a[r][k] * lo[k] : a[r][k] * hi[k];
            minrest[r][k] = minrest[r][k + 1] + contrib;
        }
    std::vector<T> partial(rows, T(0));
    Int count = 0;
    auto dfs = [&](auto&& self, std::size_t k) -> void {
        if (k == n) {
            ++count;
            return;
        }
        for (T x = lo[k]; x <= hi[k]; ++x) {
            if (--budget < 0)
                throw budget_error("lattice enumeration budget exceeded");
            bool feasible = true;
            for (std::size_t r = 0; r < rows; ++r) {
                partial[r] += a[r][k] * x;
                if (feasible && partial[r] + minrest[r][k + 1] > rhs[r])
                    feasible = false;
            }
            if (feasible)
                self(self, k + 1);
            for (std::size_t r = 0; r < rows; ++r)
                partial[r] -= a[r][k] * x;
        }
    };
    dfs(dfs, 0);
    return count;
}

}  // namespace detail

/**
 * Number of integer points x in the box with A x <= rhs, enumerated with
 * per-coordinate pruning. Falls back from int64 to arbitrary precision
 * when magnitudes do not safely fit.
 */
inline Int count_hrep_points(const IntMatrix& a, const IntVector& rhs, const Box& box,
                             std::int64_t budget = detail::kNoBudget) {
    if (box.empty())
        return 0;
    std::size_t rows = a.rows(), n = a.cols();
    if (rhs.size() != rows || box.dim() != n)
        throw std::invalid_argument("count_hrep_points: dimension mismatch");

    // int64 fast path when every partial sum is safely representable
    const Int cap = Int(std::numeric_limits<std::int64_t>::max()) / Int(4 * (n + 1));
    bool fits = true;
    for (std::size_t i = 0; i < n && fits; ++i)
        fits = abs(box.lo[i]) < cap && abs(box.hi[i]) < cap;
    for (std::size_t r = 0; r < rows && fits; ++r) {
        if (abs(rhs[r]) >= cap)
            fits = false;
        for (std::size_t j = 0; j < n && fits; ++j) {
            fits = abs(a(r, j)) < cap;
            if (fits && a(r, j) != 0) {
                Int worst = abs(a(r, j)) * std::max(abs(box.lo[j]), abs(box.hi[j]));
                fits = worst < cap;
            }
        }
    }
    if (fits) {
        std::vector<std::vector<std::int64_t>> am(rows, std::vector<std::int64_t>(n));
        std::vector<std::int64_t> rv(rows), lo(n), hi(n);
        for (std::size_t r = 0; r < rows; ++r) {
            rv[r] = rhs[r].get_si();
            for (std::size_t j = 0; j < n; ++j)
                am[r][j] = a(r, j).get_si();
        }
        for (std::size_t j = 0; j < n; ++j) {
            lo[j] = box.lo[j].get_si();
            hi[j] = box.hi[j].get_si();
        }
        return detail::count_dilate_rows<std::int64_t>(am, rv, lo, hi, budget);
    }
    std::vector<std::vector<Int>> am(rows, std::vector<Int>(n));
    std::vector<Int> rv(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        rv[r] = rhs[r];
        for (std::size_t j = 0; j < n; ++j)
            am[r][j] = a(r, j);
    }
    return detail::count_dilate_rows<Int>(am, rv, box.lo, box.hi, budget);
}

/**
 * Facet description A x <= t*b of the simplex conv(vertices), derived
 * from the rows of the inverse homogenized vertex matrix (the barycentric
 * functionals), cleared to integers.
 */
inline std::pair<IntMatrix, IntVector> simplex_hrep(const std::vector<IntVector>& vertices) {
    std::size_t n = vertices.empty() ? 0 : vertices[0].size();
    if (vertices.size() != n + 1)
        throw std::invalid_argument("simplex_hrep: need n+1 vertices in dimension n");
    RationalMatrix m(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            m(i, j) = Rational(vertices[j][i]);
        m(n, j) = 1;
    }
    auto inv = m.inverse();
    if (!inv)
        throw std::invalid_argument("simplex_hrep: affinely dependent vertices");
    // row i of inv: lambda_i(x, t) >= 0  <=>  -(c_i . x) <= e_i * t
    IntMatrix a(n + 1, n);
    IntVector b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Int denom_lcm = 1;
        for (std::size_t j = 0; j <= n; ++j)
            denom_lcm = lcm(denom_lcm, (*inv)(i, j).get_den());
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = -Rational(denom_lcm * (*inv)(i, j)).get_num();
        b[i] = Rational(denom_lcm * (*inv)(i, n)).get_num();
    }
    return {std::move(a), std::move(b)};
}

/**
 * h*-vector of a lattice d-simplex by grading the lattice points of the
 * half-open fundamental parallelepiped by last coordinate (height).
 *
 * The generator matrix G has columns (v_i, 1); the |det G| residues of
 * Z^{d+1} modulo G Z^{d+1} are enumerated through the Smith normal form
 * (lexicographically over the diagonal moduli) and each is mapped to its
 * unique representative with all generator coordinates in [0, 1).
 */
inline HStarVector parallelepiped_hstar(const std::vector<IntVector>& vertices) {
    std::size_t n = vertices.empty() ? 0 : vertices[0].size();
    if (vertices.size() != n + 1)
        throw std::invalid_argument("parallelepiped_hstar: need d+1 vertices in dimension d");
    IntMatrix g(n + 1, n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            g(i, j) = vertices[j][i];
        g(n, j) = 1;
    }
    Int det = determinant(g);
    if (det == 0)
        throw std::invalid_argument("parallelepiped_hstar: affinely dependent vertices");

    SNFResult snf = smith_normal_form(g);
    auto uinv_q = RationalMatrix(snf.u).inverse();
    auto ginv = RationalMatrix(g).inverse();
    // U is unimodular so U^{-1} is integral
    IntMatrix uinv(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            if (!is_integer((*uinv_q)(i, j)))
                throw std::logic_error("parallelepiped_hstar: U^{-1} not integral");
            uinv(i, j) = (*uinv_q)(i, j).get_num();
        }

    std::vector<Int> hist(n + 1, 0);
    for (Int idx = 0; idx < abs(det); ++idx) {
        // decode idx into y, lexicographic over the diagonal moduli
        IntVector y(n + 1);
        Int rest = idx;
        for (std::size_t k = n + 1; k-- > 0;) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), snf.d(k, k).get_mpz_t());
            y[k] = r;
            rest = q;
        }
        // coset representative x = U^{-1} y, then its [0,1)^{d+1} shift
        IntVector x = uinv.apply(y);
        std::vector<Rational> xq(n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            xq[i] = Rational(x[i]);
        std::vector<Rational> lambda = ginv->apply(xq);
        Rational height = 0;
        for (const Rational& l : lambda)
            height += l - Rational(floor_to_int(l));
        if (!is_integer(height))
            throw std::logic_error("parallelepiped_hstar: non-integer height");
        hist.at(height.get_num().get_ui()) += 1;
    }
    return HStarVector(std::move(hist), static_cast<int>(n));
}

}  // namespace ehrhart

#endif  // EHRHART_LATTICE_HPP
