/**
 * @file polytopes.hpp
 * @brief Constructors for the polytope families under study, the lattice
 *        pyramid operator, and the CLI-facing family-spec parser.
 *
 * A Polytope may carry several exact realizations at once (vertex list,
 * facet system with bounding box, zonotope generators); the computation
 * pipelines pick whichever they need.
 */
#ifndef EHRHART_POLYTOPES_HPP
#define EHRHART_POLYTOPES_HPP

#include <bit>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ehrhart/lattice.hpp"
#include "ehrhart/matrix.hpp"
#include "ehrhart/numeric.hpp"

namespace ehrhart {

/// Facet system A x <= b together with a box containing the polytope.
struct HRep {
    IntMatrix a;
    IntVector b;
    Box unit_box;
};

struct Polytope {
    std::string label;
    int dim = 0;  // affine dimension = degree of the Ehrhart polynomial
    std::vector<IntVector> vertices;    // may be empty
    std::optional<HRep> hrep;           // may be absent
    std::vector<IntVector> generators;  // zonotope realization; may be empty

    std::size_t ambient_dim() const {
        if (!vertices.empty())
            return vertices[0].size();
        if (hrep)
            return hrep->a.cols();
        if (!generators.empty())
            return generators[0].size();
        return 0;
    }

    bool is_full_dim_simplex() const {
        return !vertices.empty() && static_cast<std::size_t>(dim) == ambient_dim() &&
               vertices.size() == static_cast<std::size_t>(dim) + 1;
    }
};

/// Rank of {v_i - v_0}: the dimension of the affine span of the points.
inline int affine_rank(const std::vector<IntVector>& points) {
    if (points.size() < 2)
        return 0;
    RationalMatrix m(points.size() - 1, points[0].size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < points[0].size(); ++j)
            m(i - 1, j) = Rational(points[i][j] - points[0][j]);
    return static_cast<int>(m.rank());
}

namespace detail {

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector e(n, 0);
    e[i] = 1;
    return e;
}

inline void require(bool ok, const std::string& msg) {
    if (!ok)
        throw std::domain_error(msg);
}

}  // namespace detail

/// conv(e_1, ..., e_d, 0)
inline Polytope standard_simplex(int d) {
    detail::require(d >= 1, "standard_simplex: d must be >= 1");
    Polytope p;
    p.label = "simplex:d=" + std::to_string(d);
    p.dim = d;
    std::size_t n = static_cast<std::size_t>(d);
    p.vertices.push_back(IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        p.vertices.push_back(detail::unit_vector(n, i));
    return p;
}

/// conv(+-e_1, ..., +-e_d); facets are the 2^d sign patterns.
inline Polytope cross_polytope(int d) {
    detail::require(d >= 1, "cross_polytope: d must be >= 1");
    detail::require(d <= 20, "cross_polytope: 2^d facet system too large beyond d = 20");
    Polytope p;
    p.label = "cross:d=" + std::to_string(d);
    p.dim = d;
    std::size_t n = static_cast<std::size_t>(d);
    for (std::size_t i = 0; i < n; ++i) {
        p.vertices.push_back(detail::unit_vector(n, i));
        IntVector neg(n, 0);
        neg[i] = -1;
        p.vertices.push_back(neg);
    }
    HRep h{IntMatrix(std::size_t(1) << n, n), IntVector(std::size_t(1) << n, 1),
           Box{IntVector(n, -1), IntVector(n, 1)}};
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask)
        for (std::size_t j = 0; j < n; ++j)
            h.a(mask, j) = (mask >> j) & 1 ? -1 : 1;
    p.hrep = std::move(h);
    return p;
}

namespace detail {

inline Polytope box_polytope(const std::string& label, int d, long lo, long hi) {
    Polytope p;
    p.label = label;
    p.dim = d;
    std::size_t n = static_cast<std::size_t>(d);
    HRep h{IntMatrix(2 * n, n), IntVector(2 * n), Box{IntVector(n, lo), IntVector(n, hi)}};
    for (std::size_t i = 0; i < n; ++i) {
        h.a(2 * i, i) = 1;
        h.b[2 * i] = hi;
        h.a(2 * i + 1, i) = -1;
        h.b[2 * i + 1] = -lo;
    }
    p.hrep = std::move(h);
    // segment generators: the cube is the Minkowski sum of its edges
    for (std::size_t i = 0; i < n; ++i) {
        IntVector g(n, 0);
        g[i] = hi - lo;
        p.generators.push_back(g);
    }
    if (d <= 16) {
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            IntVector v(n);
            for (std::size_t j = 0; j < n; ++j)
                v[j] = (mask >> j) & 1 ? hi : lo;
            p.vertices.push_back(v);
        }
    }
    return p;
}

}  // namespace detail

/// [0,1]^d
inline Polytope unit_cube(int d) {
    detail::require(d >= 1, "unit_cube: d must be >= 1");
    return detail::box_polytope("cube:d=" + std::to_string(d), d, 0, 1);
}

/// [-1,1]^d
inline Polytope pm_cube(int d) {
    detail::require(d >= 1, "pm_cube: d must be >= 1");
    return detail::box_polytope("pm-cube:d=" + std::to_string(d), d, -1, 1);
}

/// conv((0,0,0),(1,0,0),(0,1,0),(1,1,h)) -- the empty 3-simplex of
/// normalized volume h.
inline Polytope reeve(const Int& h) {
    detail::require(h >= 1, "reeve: h must be >= 1");
    Polytope p;
    p.label = "reeve:h=" + h.get_str();
    p.dim = 3;
    p.vertices = {IntVector{0, 0, 0}, IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{1, 1, h}};
    return p;
}

/// conv(e_1, ..., e_d, -q) for weakly increasing positive q.
inline Polytope delta_1q(const IntVector& q) {
    detail::require(!q.empty(), "delta_1q: q must be nonempty");
    for (std::size_t i = 0; i < q.size(); ++i) {
        detail::require(q[i] >= 1, "delta_1q: q entries must be positive");
        if (i + 1 < q.size())
            detail::require(q[i] <= q[i + 1], "delta_1q: q must be weakly increasing");
    }
    Polytope p;
    std::ostringstream label;
    label << "delta1q:";
    for (std::size_t i = 0; i < q.size(); ++i)
        label << (i ? "," : "") << q[i].get_str();
    p.label = label.str();
    p.dim = static_cast<int>(q.size());
    std::size_t n = q.size();
    for (std::size_t i = 0; i < n; ++i)
        p.vertices.push_back(detail::unit_vector(n, i));
    IntVector neg(n);
    for (std::size_t i = 0; i < n; ++i)
        neg[i] = -q[i];
    p.vertices.push_back(neg);
    return p;
}

/// The non-unimodal simplices of Payne's construction:
/// q = (1,...,1, s,...,s) with sk-1 ones and r+1 copies of s; dim sk+r.
inline Polytope payne(int r, int s, int k) {
    detail::require(r >= 0, "payne: r must be >= 0");
    detail::require(s >= 3, "payne: s must be >= 3");
    detail::require(k >= r + 2, "payne: k must be >= r+2");
    IntVector q;
    for (int i = 0; i < s * k - 1; ++i)
        q.push_back(1);
    for (int i = 0; i <= r; ++i)
        q.push_back(s);
    Polytope p = delta_1q(q);
    p.label = "payne:r=" + std::to_string(r) + ",s=" + std::to_string(s) +
              ",k=" + std::to_string(k);
    return p;
}

/// q_k = (r-1) r^{k-1}: the simplex of the base-r numeral system.
inline Polytope base_r_simplex(int r, int d) {
    detail::require(r >= 2, "base_r_simplex: r must be >= 2");
    detail::require(d >= 1, "base_r_simplex: d must be >= 1");
    IntVector q;
    Int pw = 1;
    for (int i = 0; i < d; ++i) {
        q.push_back(Int(r - 1) * pw);
        pw *= r;
    }
    Polytope p = delta_1q(q);
    p.label = "base-r:r=" + std::to_string(r) + ",d=" + std::to_string(d);
    return p;
}

/// {x : 0 <= x_1/s_1 <= ... <= x_d/s_d <= 1} with integer-cleared facets.
/// Vertices: origin and v^{(j)} with v^{(j)}_i = s_i for i >= j, else 0.
inline Polytope lecture_hall(const IntVector& s) {
    detail::require(!s.empty(), "lecture_hall: s must be nonempty");
    for (const Int& si : s)
        detail::require(si >= 1, "lecture_hall: s entries must be positive");
    Polytope p;
    std::ostringstream label;
    label << "lecture-hall:";
    for (std::size_t i = 0; i < s.size(); ++i)
        label << (i ? "," : "") << s[i].get_str();
    p.label = label.str();
    std::size_t n = s.size();
    p.dim = static_cast<int>(n);

    p.vertices.push_back(IntVector(n, 0));
    for (std::size_t j = n; j-- > 0;) {
        IntVector v(n, 0);
        for (std::size_t i = j; i < n; ++i)
            v[i] = s[i];
        p.vertices.push_back(v);
    }

    HRep h{IntMatrix(n + 1, n), IntVector(n + 1, 0), Box{IntVector(n, 0), s}};
    h.a(0, 0) = -1;  // x_1 >= 0
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // x_i/s_i <= x_{i+1}/s_{i+1} cleared of denominators
        h.a(i + 1, i) = s[i + 1];
        h.a(i + 1, i + 1) = -s[i];
    }
    h.a(n, n - 1) = 1;  // x_d <= s_d
    h.b[n] = s[n - 1];
    p.hrep = std::move(h);
    return p;
}

/// The cube [-1,1]^d with every vertex chiseled at lattice distance 1:
/// |x_i| <= 1 together with <sigma, x> <= d-1 for all sign patterns.
inline Polytope chiseled_pm_cube(int d) {
    detail::require(d >= 2, "chiseled_pm_cube: d must be >= 2");
    detail::require(d <= 20, "chiseled_pm_cube: 2^d facet system too large beyond d = 20");
    Polytope p;
    p.label = "chiseled-pm-cube:d=" + std::to_string(d);
    p.dim = d;
    std::size_t n = static_cast<std::size_t>(d);
    std::size_t rows = 2 * n + (std::size_t(1) << n);
    HRep h{IntMatrix(rows, n), IntVector(rows), Box{IntVector(n, -1), IntVector(n, 1)}};
    for (std::size_t i = 0; i < n; ++i) {
        h.a(2 * i, i) = 1;
        h.b[2 * i] = 1;
        h.a(2 * i + 1, i) = -1;
        h.b[2 * i + 1] = 1;
    }
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        std::size_t r = 2 * n + mask;
        for (std::size_t j = 0; j < n; ++j)
            h.a(r, j) = (mask >> j) & 1 ? -1 : 1;
        h.b[r] = d - 1;
    }
    p.hrep = std::move(h);
    return p;
}

/// conv(0/1 vectors with coordinate sum k): the uniform matroid polytope.
/// (d-1)-dimensional inside R^d.
inline Polytope hypersimplex(int d, int k) {
    detail::require(d >= 2, "hypersimplex: d must be >= 2");
    detail::require(d <= 20, "hypersimplex: vertex enumeration too large beyond d = 20");
    detail::require(1 <= k && k <= d - 1, "hypersimplex: need 1 <= k <= d-1");
    Polytope p;
    p.label = "hypersimplex:d=" + std::to_string(d) + ",k=" + std::to_string(k);
    p.dim = d - 1;
    std::size_t n = static_cast<std::size_t>(d);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        IntVector v(n);
        for (std::size_t j = 0; j < n; ++j)
            v[j] = (mask >> j) & 1;
        p.vertices.push_back(v);
    }
    // 0 <= x_i <= 1 and sum x_i = k (two inequalities)
    std::size_t rows = 2 * n + 2;
    HRep h{IntMatrix(rows, n), IntVector(rows), Box{IntVector(n, 0), IntVector(n, 1)}};
    for (std::size_t i = 0; i < n; ++i) {
        h.a(2 * i, i) = 1;
        h.b[2 * i] = 1;
        h.a(2 * i + 1, i) = -1;
        h.b[2 * i + 1] = 0;
    }
    for (std::size_t j = 0; j < n; ++j) {
        h.a(2 * n, j) = 1;
        h.a(2 * n + 1, j) = -1;
    }
    h.b[2 * n] = k;
    h.b[2 * n + 1] = -k;
    p.hrep = std::move(h);
    return p;
}

/// Zonotope of the root directions e_i - e_j, 1 <= i < j <= d+1, in
/// R^{d+1}; d-dimensional.
inline Polytope permutahedron(int d) {
    detail::require(d >= 1, "permutahedron: d must be >= 1");
    Polytope p;
    p.label = "permutahedron:d=" + std::to_string(d);
    p.dim = d;
    std::size_t n = static_cast<std::size_t>(d) + 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IntVector g(n, 0);
            g[i] = 1;
            g[j] = -1;
            p.generators.push_back(g);
        }
    return p;
}

/// k-fold lattice pyramid: conv(P x {0}, e_{n+1}), iterated.
inline Polytope pyramid(const Polytope& base, int k) {
    if (k < 0)
        throw std::domain_error("pyramid: k must be >= 0");
    if (base.vertices.empty())
        throw std::invalid_argument(
            "pyramid: vertex representation required; supply vertices for the base polytope");
    if (k == 0)
        return base;
    Polytope p;
    p.dim = base.dim + k;
    p.label = "pyr^" + std::to_string(k) + ":" + base.label;
    p.vertices = base.vertices;
    for (int step = 0; step < k; ++step) {
        std::size_t n = p.vertices[0].size();
        for (IntVector& v : p.vertices)
            v.push_back(0);
        p.vertices.push_back(detail::unit_vector(n + 1, n));
    }
    return p;
}

/**
 * Parses the CLI family grammar:
 *   tag:key=value,...        e.g. "payne:r=0,s=3,k=2", "reeve:h=6"
 *   tag:v1,v2,...            positional vector, e.g. "lecture-hall:7,1,7"
 *   pyr^k:<spec>             k-fold pyramid prefix, e.g. "pyr^2:reeve:h=6"
 * Throws std::invalid_argument on malformed input.
 */
inline Polytope parse_family_spec(const std::string& spec);

namespace detail {

struct FamilyArgs {
    std::vector<std::pair<std::string, std::string>> kv;  // key=value pairs
    IntVector positional;

    long get_long(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key)
                return std::stol(v);
        throw std::invalid_argument("family spec: missing parameter '" + key + "'");
    }
    Int get_int(const std::string& key) const {
        for (const auto& [k, v] : kv)
            if (k == key)
                return Int(v);
        throw std::invalid_argument("family spec: missing parameter '" + key + "'");
    }
};

inline FamilyArgs parse_args(const std::string& body) {
    FamilyArgs args;
    if (body.empty())
        return args;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        try {
            if (eq == std::string::npos)
                args.positional.push_back(Int(item));
            else
                args.kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("family spec: malformed parameter '" + item + "'");
        }
    }
    return args;
}

}  // namespace detail

inline Polytope parse_family_spec(const std::string& spec) {
    if (spec.rfind("pyr^", 0) == 0) {
        auto colon = spec.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("family spec: pyramid prefix needs a base, got '" + spec +
                                        "'");
        int k;
        try {
            k = std::stoi(spec.substr(4, colon - 4));
        } catch (const std::exception&) {
            throw std::invalid_argument("family spec: malformed pyramid prefix in '" + spec + "'");
        }
        if (k < 1)
            throw std::invalid_argument("family spec: pyramid power must be >= 1");
        return pyramid(parse_family_spec(spec.substr(colon + 1)), k);
    }
    auto colon = spec.find(':');
    std::string tag = spec.substr(0, colon);
    detail::FamilyArgs args =
        colon == std::string::npos ? detail::FamilyArgs{} : detail::parse_args(spec.substr(colon + 1));
    try {
        if (tag == "simplex")
            return standard_simplex(static_cast<int>(args.get_long("d")));
        if (tag == "cross")
            return cross_polytope(static_cast<int>(args.get_long("d")));
        if (tag == "cube")
            return unit_cube(static_cast<int>(args.get_long("d")));
        if (tag == "pm-cube")
            return pm_cube(static_cast<int>(args.get_long("d")));
        if (tag == "reeve")
            return reeve(args.get_int("h"));
        if (tag == "delta1q")
            return delta_1q(args.positional);
        if (tag == "payne")
            return payne(static_cast<int>(args.get_long("r")), static_cast<int>(args.get_long("s")),
                         static_cast<int>(args.get_long("k")));
        if (tag == "base-r")
            return base_r_simplex(static_cast<int>(args.get_long("r")),
                                  static_cast<int>(args.get_long("d")));
        if (tag == "lecture-hall")
            return lecture_hall(args.positional);
        if (tag == "chiseled-pm-cube")
            return chiseled_pm_cube(static_cast<int>(args.get_long("d")));
        if (tag == "hypersimplex")
            return hypersimplex(static_cast<int>(args.get_long("d")),
                                static_cast<int>(args.get_long("k")));
        if (tag == "permutahedron")
            return permutahedron(static_cast<int>(args.get_long("d")));
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("family spec: ") + e.what());
    }
    throw std::invalid_argument("family spec: unknown family tag '" + tag + "'");
}

}  // namespace ehrhart

#endif  // EHRHART_POLYTOPES_HPP
